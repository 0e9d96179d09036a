"""Subsets of {0, ..., n-1} as bitmasks."""


def elements(mask):
    """Yield the elements of a bitmask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def subsets(mask):
    """Yield all submasks of `mask`, including 0 and `mask` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def nonempty_subsets(mask):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def popcount(mask):
    return mask.bit_count()


def canonical_key(mask):
    """Sort key putting small sets first, ties broken by numeric value."""
    return (mask.bit_count(), mask)


def mask_of(iterable):
    m = 0
    for i in iterable:
        m |= 1 << i
    return m
