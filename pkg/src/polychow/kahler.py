"""Strictly convex piecewise linear classes and the Kaehler package.

The canonical ample class is the support function of the nestohedron of
the lifted building set: its value on the ray of a member G counts the
members contained in G.  Strict convexity is certified on the complete
ambient fan (the nested-set fan of the lifted building set over the
Boolean ground), and inherited by the Bergman fan, which is a subfan.

Hard Lefschetz and Hodge-Riemann are then verified by exact rational
linear algebra in the standard-monomial bases of the Chow ring.
"""

from fractions import Fraction
from itertools import combinations

from . import linalg
from .building import BuildingSet, BuildingSetError
from .chow import ChowPair, poly_mul, poly_pow
from .fan import nested_set_fan, primitive, subset_vector
from .polymatroid import ProjectionMap, boolean_polymatroid


class PLFunction:
    """A piecewise linear function on a fan, given by its ray values."""

    __slots__ = ("fan", "values", "strictly_convex")

    def __init__(self, fan, values):
        values = tuple(Fraction(v) for v in values)
        if len(values) != len(fan.rays):
            raise ValueError("one value per ray required")
        object.__setattr__(self, "fan", fan)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "strictly_convex", None)

    def __setattr__(self, name, value):
        raise AttributeError("PLFunction is immutable")

    def value_on_ray(self, ray):
        return self.values[self.fan.ray_index[tuple(ray)]]

    def __repr__(self):
        return "PLFunction(%d rays, strictly_convex=%r)" % (
            len(self.values), self.strictly_convex)


def ambient_complete_fan(pair):
    """The nested-set fan of the lifted building set over the Boolean
    ground set, which is complete and contains the Bergman fan as a
    subfan.  Requires the lifted members to form a building set of the
    Boolean lattice (in particular the lift must be a simple matroid)."""
    m = pair.proj.m
    base = boolean_polymatroid(ProjectionMap((1,) * m))
    building = BuildingSet(base, pair.lifted.members, validate=True)
    return nested_set_fan(building, base.full_mask, m)


def nestohedron_values(pair):
    """Ray values of the negated nestohedron support function.

    The support function of the nestohedron (min convention) evaluated on
    the indicator vector of G counts the members contained in G.  On the
    canonical quotient representatives, which subtract the all-ones vector
    whenever G contains the dropped coordinate, the count shifts by the
    total number of members; negating then yields a function that is
    strictly convex in the wall-inequality orientation used here and whose
    top power has positive degree.
    """
    members = pair.lifted.members
    full = pair.M.full_mask
    total = len(members)
    drop = pair.proj.m - 1
    out = {}
    for g in members:
        if g == full:
            continue
        count = sum(1 for h in members if h & g == h)
        out[g] = (total if g >> drop & 1 else 0) - count
    return out


def nestohedron_class(pair):
    """Returns (PLFunction on the ambient fan, degree-1 element of the
    Chow ring).  The PL function is validated strictly convex; failure
    raises, since it would indicate a bug."""
    ambient = ambient_complete_fan(pair)
    values_by_member = nestohedron_values(pair)
    m = pair.proj.m
    values = [None] * len(ambient.rays)
    for g, v in values_by_member.items():
        ray = primitive(subset_vector(g, m))
        values[ambient.ray_index[ray]] = v
    if any(v is None for v in values):
        raise AssertionError("ambient fan has a ray outside the building set")
    ell = PLFunction(ambient, values)
    if not is_strictly_convex(ambient, ell):
        raise AssertionError("nestohedron class failed strict convexity")
    object.__setattr__(ell, "strictly_convex", True)
    fy = pair.fy
    poly = {}
    for g, v in values_by_member.items():
        poly = {**poly}
        for mono, c in fy.var(g).items():
            poly[mono] = poly.get(mono, 0) + v * c
    return ell, poly


def is_strictly_convex(fan, pl):
    """Wall-by-wall strict convexity on a complete simplicial unimodular
    fan: at a wall tau between maximal cones with opposite rays u, u' the
    relation u + u' = sum(a_v * v) over rays v of tau must satisfy
    pl(u) + pl(u') > sum(a_v * pl(v)).
    """
    d = fan.ambient_dim
    maxes = fan.maximal_cones()
    if any(len(c) != d for c in maxes):
        raise ValueError("fan is not complete (a maximal cone is not full-dimensional)")
    walls = {}
    for c in maxes:
        for facet in combinations(sorted(c), d - 1):
            walls.setdefault(frozenset(facet), []).append(c)
    for facet, adjacent in walls.items():
        if len(adjacent) != 2:
            raise ValueError("fan is not complete (wall not shared by two cones)")
        u = fan.rays[next(iter(adjacent[0] - facet))]
        u2 = fan.rays[next(iter(adjacent[1] - facet))]
        tau_rays = fan.cone_rays(facet)
        target = [Fraction(a + b) for a, b in zip(u, u2)]
        cols = [[Fraction(r[i]) for r in tau_rays] for i in range(d)]
        coeffs = linalg.solve(cols, target) if tau_rays else []
        if coeffs is None:
            raise ValueError("wall relation is not supported on the wall; fan is not unimodular")
        lhs = pl.value_on_ray(u) + pl.value_on_ray(u2)
        rhs = sum(a * pl.value_on_ray(r) for a, r in zip(coeffs, tau_rays))
        if lhs <= rhs:
            return False
    return True


def _multiplication_matrix(pair, factor_nf, src_degree, dst_degree):
    """Matrix of multiplication by a fixed element between graded pieces."""
    fy = pair.fy
    cols = [fy.coords(poly_mul(factor_nf, {m: 1}), dst_degree)
            for m in fy.basis[src_degree]]
    rows = len(fy.basis[dst_degree])
    return [[cols[j][i] for j in range(len(cols))] for i in range(rows)]


def hard_lefschetz_check(pair, ell, k):
    """Multiplication by ell^(r-2k-1) from degree k to degree r-1-k must
    be a square invertible rational matrix."""
    fy = pair.fy
    r = fy.r
    if not 0 <= 2 * k < r:
        raise ValueError("k out of range")
    power = r - 2 * k - 1
    factor = fy.nf(poly_pow(ell, power)) if power else fy.one()
    matrix = _multiplication_matrix(pair, factor, k, r - 1 - k)
    if len(fy.basis[k]) != len(fy.basis[r - 1 - k]):
        return False
    if not matrix:
        return True
    return linalg.det(matrix) != 0


def _primitive_kernel(pair, ell, k):
    """Basis (as coefficient vectors over the degree-k monomial basis) of
    the kernel of multiplication by ell^(r-2k) into degree r-k."""
    fy = pair.fy
    r = fy.r
    dim = len(fy.basis[k])
    if r - k > r - 1:
        # target degree r vanishes, so the kernel is everything
        return [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    factor = fy.nf(poly_pow(ell, r - 2 * k))
    matrix = _multiplication_matrix(pair, factor, k, r - k)
    if not matrix:
        return [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    return linalg.kernel_basis(matrix)


def hodge_riemann_check(pair, ell, k):
    """(-1)^k deg(ell^(r-2k-1) a b) must be positive definite on the
    kernel of multiplication by ell^(r-2k)."""
    fy = pair.fy
    r = fy.r
    if not 0 <= 2 * k < r:
        raise ValueError("k out of range")
    basis = fy.basis[k]
    power = r - 2 * k - 1
    factor = fy.nf(poly_pow(ell, power)) if power else fy.one()
    sign = -1 if k % 2 else 1
    form = [[sign * pair.deg_fy(poly_mul(factor, poly_mul({m1: 1}, {m2: 1})))
             for m2 in basis] for m1 in basis]
    kernel = _primitive_kernel(pair, ell, k)
    if not kernel:
        return True
    gram = [[sum(u[i] * form[i][j] * v[j]
                 for i in range(len(basis)) for j in range(len(basis)))
             for v in kernel] for u in kernel]
    return linalg.is_positive_definite(gram)


def kahler_package_report(pair, ell=None):
    """Poincare pairing, Hard Lefschetz, and Hodge-Riemann for every
    admissible k, as a dict of named verdicts."""
    from .chow import pairing_matrix

    if ell is None:
        _, ell = nestohedron_class(pair)
    r = pair.fy.r
    report = {}
    for k in range((r + 1) // 2):
        matrix = pairing_matrix(pair, k, ring="fy")
        square = len(matrix) == 0 or len(matrix) == len(matrix[0])
        unimodular = square and (not matrix or linalg.det(matrix) in (1, -1))
        report["poincare_k%d" % k] = unimodular
        report["hard_lefschetz_k%d" % k] = hard_lefschetz_check(pair, ell, k)
        report["hodge_riemann_k%d" % k] = hodge_riemann_check(pair, ell, k)
    return report


def sigma_cone_class(pair, F):
    """The sigma-cone generator -sum(x_G for G containing F) as a DP
    element, returned with its image in the FY presentation."""
    if F not in pair.G.members:
        raise ValueError("flat is not a building set member")
    dp = pair.dp
    poly = {}
    for g in dp.var_flats:
        if g & F == F:
            for mono, c in dp.var(g).items():
                poly[mono] = poly.get(mono, 0) - c
    return poly, pair.phi(poly)


def beta_class(pair, i):
    """For a matroid with its maximal building set: the class
    sum(y_F for proper flats F not containing i)."""
    fy = pair.fy
    full = pair.M.full_mask
    poly = {}
    for g in fy.var_flats:
        if g == full or g >> i & 1:
            continue
        for mono, c in fy.var(g).items():
            poly[mono] = poly.get(mono, 0) + c
    return poly


def beta_class_corank_form(pair):
    """The same class written as -sum((|G| - 1) y_G over members with at
    least two elements), including the full ground set."""
    fy = pair.fy
    poly = {}
    for g in fy.var_flats:
        size = g.bit_count()
        if size <= 1:
            continue
        for mono, c in fy.var(g).items():
            poly[mono] = poly.get(mono, 0) - (size - 1) * c
    return poly
