"""Polymatroids given by explicit rank tables on subset bitmasks.

A polymatroid on E = {0, ..., n-1} is a normalized, monotone, submodular
integer function on subsets.  We additionally require looplessness (every
singleton has positive rank) throughout.
"""

from .bitsets import canonical_key, elements, popcount

MAX_GROUND = 16


class PolymatroidError(ValueError):
    """Axiom violation, carrying the name of the axiom and a witness."""

    def __init__(self, axiom, witness, message):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class Polymatroid:
    """Immutable rank table on the subsets of {0, ..., n-1}."""

    __slots__ = ("n", "rank_table", "_flats")

    def __init__(self, rank_table, validate=True):
        rank_table = tuple(int(x) for x in rank_table)
        size = len(rank_table)
        if size == 0 or size & (size - 1):
            raise PolymatroidError("table", None,
                                   "rank table length %d is not a power of two" % size)
        object.__setattr__(self, "n", size.bit_length() - 1)
        object.__setattr__(self, "rank_table", rank_table)
        object.__setattr__(self, "_flats", None)
        if self.n > MAX_GROUND:
            raise PolymatroidError("size", None, "ground set larger than %d" % MAX_GROUND)
        if validate:
            self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("Polymatroid is immutable")

    def _validate(self):
        tab = self.rank_table
        n = self.n
        if tab[0] != 0:
            raise PolymatroidError("normalization", (0,),
                                   "rank of the empty set is %d, expected 0" % tab[0])
        for a in range(1 << n):
            if tab[a] < 0:
                raise PolymatroidError("nonnegativity", (a,), "rank[%d] < 0" % a)
            for i in range(n):
                b = a | (1 << i)
                if b != a and tab[a] > tab[b]:
                    raise PolymatroidError(
                        "monotonicity", (a, b),
                        "monotonicity fails at A=%d, B=%d" % (a, b))
        for i in range(n):
            if tab[1 << i] < 1:
                raise PolymatroidError("looplessness", (1 << i,),
                                       "element %d is a loop" % i)
        for a in range(1 << n):
            for b in range(a + 1, 1 << n):
                if tab[a | b] + tab[a & b] > tab[a] + tab[b]:
                    raise PolymatroidError(
                        "submodularity", (a, b),
                        "submodularity fails at A=%d, B=%d" % (a, b))

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    @property
    def r(self):
        """Rank of the whole ground set."""
        return self.rank_table[self.full_mask]

    def rank(self, mask):
        return self.rank_table[mask]

    def closure(self, mask):
        """Smallest flat containing `mask`.

        For a submodular rank function one sweep suffices: every element
        that does not raise the rank belongs to the closure.
        """
        rk = self.rank_table[mask]
        out = mask
        for i in range(self.n):
            bit = 1 << i
            if not mask & bit and self.rank_table[mask | bit] == rk:
                out |= bit
        return out

    def is_flat(self, mask):
        return self.closure(mask) == mask

    def flats(self):
        """All flats, sorted by (size, numeric value)."""
        if self._flats is None:
            found = sorted((m for m in range(1 << self.n) if self.is_flat(m)),
                           key=canonical_key)
            object.__setattr__(self, "_flats", tuple(found))
        return self._flats

    def flat_lattice(self):
        return FlatLattice(self)

    def restriction(self, flat_mask):
        """Restriction to a flat, with elements reindexed in increasing order."""
        if not self.is_flat(flat_mask):
            raise PolymatroidError("restriction", (flat_mask,),
                                   "restriction requires a flat")
        elems = list(elements(flat_mask))
        k = len(elems)
        table = []
        for sub in range(1 << k):
            mask = 0
            for j in range(k):
                if sub >> j & 1:
                    mask |= 1 << elems[j]
            table.append(self.rank_table[mask])
        return Polymatroid(table, validate=False)

    def direct_sum(self, other):
        n1, n2 = self.n, other.n
        table = []
        for mask in range(1 << (n1 + n2)):
            a = mask & ((1 << n1) - 1)
            b = mask >> n1
            table.append(self.rank_table[a] + other.rank_table[b])
        return Polymatroid(table, validate=False)

    def __eq__(self, other):
        return isinstance(other, Polymatroid) and self.rank_table == other.rank_table

    def __hash__(self):
        return hash(self.rank_table)

    def __repr__(self):
        if self.n <= 4:
            return "Polymatroid(%r)" % (self.rank_table,)
        return "Polymatroid(n=%d, r=%d)" % (self.n, self.r)


def validate_polymatroid(rank_table):
    """Build a polymatroid, reporting the first violated axiom."""
    return Polymatroid(rank_table)


class ProjectionMap:
    """A surjection pi: E~ -> E with fibers of prescribed sizes.

    Elements of E~ = {0, ..., m-1} are grouped so that fiber i occupies a
    contiguous block of `fiber_sizes[i]` indices.
    """

    __slots__ = ("fiber_sizes", "n", "m", "fiber_masks", "fiber_of")

    def __init__(self, fiber_sizes):
        sizes = tuple(int(s) for s in fiber_sizes)
        if any(s < 1 for s in sizes):
            raise ValueError("fiber sizes must be positive")
        object.__setattr__(self, "fiber_sizes", sizes)
        object.__setattr__(self, "n", len(sizes))
        object.__setattr__(self, "m", sum(sizes))
        masks = []
        owner = []
        start = 0
        for i, s in enumerate(sizes):
            masks.append(((1 << s) - 1) << start)
            owner.extend([i] * s)
            start += s
        object.__setattr__(self, "fiber_masks", tuple(masks))
        object.__setattr__(self, "fiber_of", tuple(owner))

    def __setattr__(self, name, value):
        raise AttributeError("ProjectionMap is immutable")

    def preimage(self, A_mask):
        """Mask in E~ of pi^{-1}(A)."""
        out = 0
        for i in elements(A_mask):
            out |= self.fiber_masks[i]
        return out

    def image(self, S_mask):
        """Mask in E of pi(S)."""
        out = 0
        for i, fm in enumerate(self.fiber_masks):
            if S_mask & fm:
                out |= 1 << i
        return out

    def __repr__(self):
        return "ProjectionMap(%r)" % (self.fiber_sizes,)


def boolean_polymatroid(proj):
    """The Boolean polymatroid B(pi): rank of A is the size of its preimage."""
    if not isinstance(proj, ProjectionMap):
        proj = ProjectionMap(proj)
    table = [popcount(proj.preimage(a)) for a in range(1 << proj.n)]
    return Polymatroid(table, validate=False)


class FlatLattice:
    """The lattice of flats of a rank structure, ordered by inclusion.

    Works for any object exposing `n`/`full_mask`-style ground data plus
    `flats()` and `closure()`; meet is intersection, join is closure of
    the union.
    """

    __slots__ = ("base", "flats", "index")

    def __init__(self, base):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "flats", tuple(base.flats()))
        object.__setattr__(self, "index", {f: i for i, f in enumerate(self.flats)})

    def __setattr__(self, name, value):
        raise AttributeError("FlatLattice is immutable")

    def __len__(self):
        return len(self.flats)

    def __contains__(self, mask):
        return mask in self.index

    def leq(self, f, g):
        return f & g == f

    def join(self, f, g):
        return self.base.closure(f | g)

    def meet(self, f, g):
        return f & g

    @property
    def bottom(self):
        return self.flats[0]

    @property
    def top(self):
        return self.flats[-1]

    def atoms(self):
        """Minimal nonempty flats."""
        nonbottom = [f for f in self.flats if f != self.bottom]
        return tuple(f for f in nonbottom
                     if not any(g != f and g & f == g for g in nonbottom))

    def interval_below(self, f):
        return tuple(g for g in self.flats if g & f == g)

    def isomorphic_via(self, other, phi):
        """Check that flat map `phi` is an order isomorphism onto `other`."""
        images = [phi(f) for f in self.flats]
        if sorted(images) != sorted(other.flats):
            return False
        for f in self.flats:
            for g in self.flats:
                if (f & g == f) != (phi(f) & phi(g) == phi(f)):
                    return False
        return True
