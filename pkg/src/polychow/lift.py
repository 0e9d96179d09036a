"""Minimal multisymmetric lifts of polymatroids.

The lift of P lives on the disjoint union of fibers E~_i of size rk(i).
Its rank is a minimum over subsets of the *base* ground set:

    rk(S) = min over A of  rk_P(A) + |S \\ preimage(A)|

which makes it cheap to evaluate even though the lifted ground set is
larger.  The product of fiber symmetric groups is never materialized:
orbits of subsets depend only on per-fiber counts.
"""

from threading import Lock

from .bitsets import canonical_key, popcount
from .polymatroid import FlatLattice, Polymatroid, PolymatroidError, ProjectionMap

MAX_LIFT_GROUND = 16


class MultisymMatroid:
    """The minimal multisymmetric lift of a polymatroid.

    Exposes the same rank/closure/flats surface as `Polymatroid`, so the
    building-set and fan machinery can treat both uniformly.
    """

    __slots__ = ("base", "proj", "_memo", "_lock", "_flats")

    def __init__(self, base):
        object.__setattr__(self, "base", base)
        sizes = [base.rank(1 << i) for i in range(base.n)]
        object.__setattr__(self, "proj", ProjectionMap(sizes))
        if self.proj.m > MAX_LIFT_GROUND:
            raise PolymatroidError("size", None,
                                   "lift ground set larger than %d" % MAX_LIFT_GROUND)
        object.__setattr__(self, "_memo", {})
        object.__setattr__(self, "_lock", Lock())
        object.__setattr__(self, "_flats", None)

    def __setattr__(self, name, value):
        raise AttributeError("MultisymMatroid is immutable")

    @property
    def n(self):
        return self.proj.m

    @property
    def m(self):
        return self.proj.m

    @property
    def full_mask(self):
        return (1 << self.proj.m) - 1

    @property
    def r(self):
        return self.rank(self.full_mask)

    def rank(self, S_mask):
        memo = self._memo
        cached = memo.get(S_mask)
        if cached is not None:
            return cached
        base = self.base
        preimage = self.proj.preimage
        best = popcount(S_mask)  # A = empty
        for A in range(1, 1 << base.n):
            value = base.rank_table[A] + popcount(S_mask & ~preimage(A))
            if value < best:
                best = value
        with self._lock:
            memo[S_mask] = best
        return best

    def closure(self, S_mask):
        rk = self.rank(S_mask)
        out = S_mask
        for e in range(self.m):
            bit = 1 << e
            if not S_mask & bit and self.rank(S_mask | bit) == rk:
                out |= bit
        return out

    def is_flat(self, S_mask):
        return self.closure(S_mask) == S_mask

    def flats(self):
        """All flats of the lift, enumerated by closure BFS."""
        if self._flats is None:
            bottom = self.closure(0)
            seen = {bottom}
            frontier = [bottom]
            while frontier:
                nxt = []
                for f in frontier:
                    for e in range(self.m):
                        bit = 1 << e
                        if not f & bit:
                            g = self.closure(f | bit)
                            if g not in seen:
                                seen.add(g)
                                nxt.append(g)
                frontier = nxt
            object.__setattr__(self, "_flats", tuple(sorted(seen, key=canonical_key)))
        return self._flats

    def flat_lattice(self):
        return FlatLattice(self)

    def geometric_part(self, S_mask):
        """Union of the fibers entirely contained in S."""
        out = 0
        for fm in self.proj.fiber_masks:
            if S_mask & fm == fm:
                out |= fm
        return out

    def is_geometric(self, S_mask):
        return self.geometric_part(S_mask) == S_mask

    def geometric_flats(self):
        return tuple(f for f in self.flats() if self.is_geometric(f))

    def as_polymatroid(self):
        """The lift as an explicit rank table (small ground sets only)."""
        table = [self.rank(S) for S in range(1 << self.m)]
        return Polymatroid(table, validate=False)

    def __repr__(self):
        return "MultisymMatroid(base=%r, fibers=%r)" % (self.base, self.proj.fiber_sizes)


def lift(P):
    """The unique minimal multisymmetric lift of a loopless polymatroid."""
    return MultisymMatroid(P)


def lift_rank(M, S_mask):
    return M.rank(S_mask)


def geometric_flat_lattice(M):
    """Geometric flats of the lift together with the base-lattice bijection.

    Returns (lattice_of_P, geometric_flats_of_M, mapping F -> preimage(F)).
    Raises if some preimage of a base flat fails to be a flat of M, which
    would indicate an implementation bug.
    """
    base_lattice = M.base.flat_lattice()
    mapping = {}
    for F in base_lattice.flats:
        pre = M.proj.preimage(F)
        if not M.is_flat(pre):
            raise AssertionError(
                "preimage of base flat %d is not a flat of the lift" % F)
        mapping[F] = pre
    geo = M.geometric_flats()
    if sorted(mapping.values()) != sorted(geo):
        raise AssertionError("geometric flats do not match base flat preimages")
    return base_lattice, geo, mapping
