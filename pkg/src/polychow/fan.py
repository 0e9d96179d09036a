"""Bergman fans of polymatroids, with exact structural validators.

Lattice vectors live in Z^E~ / Z(1,...,1); the canonical representative
drops the last coordinate, so the indicator vector of a subset S is

    v_i = [i in S] - [m-1 in S]      (i = 0, ..., m-2).

Rays are stored primitive and deduplicated; a cone is the sorted set of
its ray indices (all cones here are simplicial).
"""

from fractions import Fraction
from itertools import combinations
from math import gcd
from random import Random

from . import linalg
from .bitsets import canonical_key, elements, mask_of, nonempty_subsets, popcount
from .building import BuildingSet, lifted_building_set, maximal_building_set, nested_complex
from .lift import lift
from .polymatroid import ProjectionMap, boolean_polymatroid


def subset_vector(S_mask, m):
    """Quotient representative of the indicator vector e_S."""
    drop = 1 if S_mask >> (m - 1) & 1 else 0
    return tuple((1 if S_mask >> i & 1 else 0) - drop for i in range(m - 1))


def primitive(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


class Fan:
    """A simplicial fan given by a ray table and cones as ray-index sets."""

    __slots__ = ("ambient_dim", "rays", "ray_index", "cones")

    def __init__(self, ambient_dim, rays, cones):
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "rays", tuple(tuple(r) for r in rays))
        object.__setattr__(self, "ray_index", {r: i for i, r in enumerate(self.rays)})
        object.__setattr__(self, "cones", frozenset(frozenset(c) for c in cones))

    def __setattr__(self, name, value):
        raise AttributeError("Fan is immutable")

    def cone_rays(self, cone):
        return [self.rays[i] for i in sorted(cone)]

    def dim(self, cone):
        return len(cone)

    @property
    def max_dim(self):
        return max((len(c) for c in self.cones), default=0)

    def maximal_cones(self):
        cones = self.cones
        return [c for c in cones if not any(c < d for d in cones)]

    def cones_as_ray_sets(self):
        """Canonical form for cross-construction comparison."""
        return {frozenset(self.rays[i] for i in c) for c in self.cones}

    def __eq__(self, other):
        return (isinstance(other, Fan)
                and self.ambient_dim == other.ambient_dim
                and self.cones_as_ray_sets() == other.cones_as_ray_sets())

    def __hash__(self):
        return hash((self.ambient_dim, frozenset(self.cones_as_ray_sets())))

    def __repr__(self):
        return "Fan(dim=%d, rays=%d, cones=%d)" % (
            self.ambient_dim, len(self.rays), len(self.cones))


def _fan_from_ray_sets(ambient_dim, ray_sets):
    rays = sorted({r for s in ray_sets for r in s})
    index = {r: i for i, r in enumerate(rays)}
    cones = {frozenset(index[r] for r in s) for s in ray_sets}
    return Fan(ambient_dim, rays, cones)


def nested_set_fan(building, full_mask, m):
    """Cones spanned by indicator vectors of nested sets not containing E~."""
    complexes = nested_complex(building, exclude=full_mask)
    ray_sets = []
    for N in complexes:
        ray_sets.append(frozenset(primitive(subset_vector(g, m)) for g in N))
    return _fan_from_ray_sets(m - 1, ray_sets)


def bergman_fan(P, G=None):
    """The Bergman fan of (P, G) via nested sets of the lifted building set."""
    M, lifted = lifted_building_set(P, G)
    return nested_set_fan(lifted, M.full_mask, M.m)


def _chains(items_leq, items):
    """All chains (as tuples, increasing) in a poset of masks under inclusion."""
    out = [()]
    items = sorted(items, key=canonical_key)

    def extend(chain, start):
        for idx in range(start, len(items)):
            g = items[idx]
            if not chain or (chain[-1] & g == chain[-1] and chain[-1] != g):
                out.append(chain + (g,))
                extend(chain + (g,), idx + 1)

    extend((), 0)
    return out


def maximal_bergman_fan_direct(P):
    """The Bergman fan of P with the maximal building set, built directly
    from chains of flats plus a subset S subject to the rank inequality.

    The empty flat participates in the chain, so for every flat F in the
    chain (including the empty set) and every nonempty T contained in
    S minus preimage(F) the inequality rk(F + pi(T)) > rk(F) + |T| must
    hold.
    """
    M = lift(P)
    proj = M.proj
    m = proj.m
    full = P.full_mask
    proper_flats = [f for f in P.flats() if f != 0 and f != full]
    ray_sets = set()
    for chain in _chains(None, proper_flats):
        flats_with_empty = (0,) + chain
        for S in range(1 << m):
            ok = True
            for F in flats_with_empty:
                outside = S & ~proj.preimage(F)
                for T in nonempty_subsets(outside):
                    if P.rank(F | proj.image(T)) <= P.rank(F) + popcount(T):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            rays = {primitive(subset_vector(proj.preimage(F), m)) for F in chain}
            rays.update(primitive(subset_vector(1 << e, m)) for e in elements(S))
            ray_sets.add(frozenset(rays))
    return _fan_from_ray_sets(m - 1, ray_sets)


def boolean_bergman_fan(proj):
    """The complete fan of a Boolean polymatroid: chains of proper nonempty
    subsets of E plus a subset S of E~ containing no fiber."""
    if not isinstance(proj, ProjectionMap):
        proj = ProjectionMap(proj)
    n, m = proj.n, proj.m
    full = (1 << n) - 1
    proper = [a for a in range(1, full)]
    fiber_free = [S for S in range(1 << m)
                  if not any(S & fm == fm for fm in proj.fiber_masks)]
    ray_sets = set()
    for chain in _chains(None, proper):
        for S in fiber_free:
            rays = {primitive(subset_vector(proj.preimage(F), m)) for F in chain}
            rays.update(primitive(subset_vector(1 << e, m)) for e in elements(S))
            ray_sets.add(frozenset(rays))
    return _fan_from_ray_sets(m - 1, ray_sets)


def cone_coordinates(fan, cone, w):
    """Exact coordinates of w in the ray basis of a simplicial cone, or
    None if w is outside the cone's span."""
    rays = fan.cone_rays(cone)
    if not rays:
        return [] if all(x == 0 for x in w) else None
    cols = [[Fraction(r[i]) for r in rays] for i in range(fan.ambient_dim)]
    return linalg.solve(cols, [Fraction(x) for x in w])


def cone_contains(fan, cone, w, strict=False):
    coords = cone_coordinates(fan, cone, w)
    if coords is None:
        return False
    if strict:
        return all(c > 0 for c in coords)
    return all(c >= 0 for c in coords)


def find_cone(fan, w):
    """The unique cone whose relative interior contains w, or None."""
    if all(x == 0 for x in w):
        zero = frozenset()
        return zero if zero in fan.cones else None
    for cone in fan.cones:
        if cone and cone_contains(fan, cone, w, strict=True):
            return cone
    return None


def refines(fine, coarse):
    """True iff every cone of `fine` lies inside some cone of `coarse`."""
    if fine.ambient_dim != coarse.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    coarse_cones = sorted(coarse.cones, key=len, reverse=True)
    for cone in fine.cones:
        rays = fine.cone_rays(cone)
        if not any(all(cone_contains(coarse, c, r) for r in rays)
                   for c in coarse_cones):
            return False
    return True


def in_support(fan, w):
    return any(cone_contains(fan, cone, w) for cone in fan.cones)


def random_point(rng, dim, spread=10_000):
    return tuple(Fraction(rng.randint(-spread, spread), rng.randint(1, 97))
                 for _ in range(dim))


def same_support(f1, f2, trials=400, seed=0):
    """Exact containment in the refining direction when available, plus
    randomized point-membership agreement."""
    if f1.ambient_dim != f2.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    rng = Random(seed)
    if refines(f1, f2):
        # support(f1) inside support(f2); test the reverse by sampling
        # inside the cones of f2.
        for cone in f2.maximal_cones():
            rays = f2.cone_rays(cone)
            for _ in range(max(1, trials // max(1, len(f2.cones)))):
                coeffs = [Fraction(rng.randint(1, 50), rng.randint(1, 7))
                          for _ in rays]
                w = tuple(sum(c * r[i] for c, r in zip(coeffs, rays))
                          for i in range(f2.ambient_dim))
                if not in_support(f1, w):
                    return False
        return True
    for _ in range(trials):
        w = random_point(rng, f1.ambient_dim)
        if in_support(f1, w) != in_support(f2, w):
            return False
    return True


# --- structural validators ---------------------------------------------------


def is_unimodular(fan):
    """Every cone's rays extend to a lattice basis (SNF all ones)."""
    for cone in fan.cones:
        rays = fan.cone_rays(cone)
        if not rays:
            continue
        diag, *_ = linalg.smith_normal_form(rays)
        if any(d != 1 for d in diag[:len(rays)]):
            return False
        if linalg.rank(rays) != len(rays):
            return False
    return True


def is_face_closed(fan):
    """Faces of a simplicial cone are the subsets of its rays."""
    cones = fan.cones
    return all(frozenset(sub) in cones
               for c in cones
               for k in range(len(c))
               for sub in combinations(sorted(c), k))


def _extreme_rays_nonneg_kernel(A):
    """Extreme rays of {z >= 0 : A z = 0}, by minimal-support enumeration.

    The cone is pointed, so it is generated by vectors whose support J
    makes the columns of A restricted to J have a one-dimensional kernel.
    """
    ncols = len(A[0]) if A else 0
    nrows = len(A)
    out = []
    max_support = min(ncols, linalg.rank(A) + 1) if A else 1
    for size in range(1, max_support + 1):
        for J in combinations(range(ncols), size):
            sub = [[row[j] for j in J] for row in A]
            basis = linalg.kernel_basis(sub)
            if len(basis) != 1:
                continue
            v = basis[0]
            if all(x >= 0 for x in v) or all(x <= 0 for x in v):
                if any(x < 0 for x in v):
                    v = [-x for x in v]
                if all(x > 0 for x in v):
                    z = [Fraction(0)] * ncols
                    for j, x in zip(J, v):
                        z[j] = x
                    out.append(z)
    return out


def pairwise_intersections_are_faces(fan):
    """Exact check that any two maximal cones meet in the cone over their
    common rays.  For a face-closed simplicial collection this implies the
    property for all pairs of cones."""
    maxes = fan.maximal_cones()
    d = fan.ambient_dim
    for a, b in combinations(maxes, 2):
        common = a & b
        ra = fan.cone_rays(a)
        rb = fan.cone_rays(b)
        if not ra or not rb:
            continue
        # {(lam, mu) >= 0 : U lam - V mu = 0}; every extreme ray must be
        # supported on the shared rays.
        A = [[Fraction(r[i]) for r in ra] + [Fraction(-r[i]) for r in rb]
             for i in range(d)]
        for z in _extreme_rays_nonneg_kernel(A):
            point = tuple(sum(z[k] * ra[k][i] for k in range(len(ra)))
                          for i in range(d))
            if not cone_contains(fan, frozenset(common), point):
                return False
    return True


def balancing_check(fan):
    """Weight-one balancing: at every wall the sum of the opposite primitive
    generators lies in the span of the wall."""
    maxes = fan.maximal_cones()
    if not maxes:
        return True
    d = len(next(iter(maxes)))
    if any(len(c) != d for c in maxes):
        raise ValueError("fan is not pure")
    walls = {c for c in fan.cones if len(c) == d - 1}
    for tau in walls:
        adjacent = [c for c in maxes if tau < c]
        if not adjacent:
            continue
        total = [0] * fan.ambient_dim
        for sigma in adjacent:
            extra = next(iter(sigma - tau))
            ray = fan.rays[extra]
            total = [t + x for t, x in zip(total, ray)]
        span = fan.cone_rays(tau)
        if not span:
            if any(x != 0 for x in total):
                return False
        elif linalg.rank(span + [list(total)]) != linalg.rank(span):
            return False
    return True


def is_complete(fan, trials=200, seed=0):
    """Sampling check: every random rational point lies in the relative
    interior of exactly one cone."""
    rng = Random(seed)
    for _ in range(trials):
        w = random_point(rng, fan.ambient_dim)
        hits = sum(1 for cone in fan.cones
                   if (cone and cone_contains(fan, cone, w, strict=True))
                   or (not cone and all(x == 0 for x in w)))
        if hits != 1:
            return False
    return True


def validate_fan(fan, expected_max_dim=None, complete=None, seed=0):
    """Run the structural validators; returns a dict of named booleans."""
    report = {
        "unimodular": is_unimodular(fan),
        "face_closed": is_face_closed(fan),
        "pairwise_faces": pairwise_intersections_are_faces(fan),
        "balanced": balancing_check(fan),
    }
    if expected_max_dim is not None:
        report["max_dim"] = fan.max_dim == expected_max_dim
    if complete is not None:
        report["complete"] = is_complete(fan, seed=seed) == complete
    return report
