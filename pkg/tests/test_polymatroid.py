import pytest

import polychow as pc
from conftest import P1, P2, P3, P4, U34, boolean_table


def test_valid_tables():
    for table in (P1, P2, P3, P4, U34):
        pc.validate_polymatroid(table)


def test_boolean_12_is_valid():
    assert boolean_table((1, 2)) == [0, 1, 2, 3]
    pc.validate_polymatroid([0, 1, 2, 3])


def test_submodularity_witness():
    with pytest.raises(pc.PolymatroidError) as err:
        pc.Polymatroid([0, 1, 1, 3])
    assert err.value.axiom == "submodularity"
    assert err.value.witness == (1, 2)


def test_normalization_and_looplessness():
    with pytest.raises(pc.PolymatroidError) as err:
        pc.Polymatroid([1, 1])
    assert err.value.axiom == "normalization"
    with pytest.raises(pc.PolymatroidError) as err:
        pc.Polymatroid([0, 0])
    assert err.value.axiom == "looplessness"


def test_monotonicity_witness():
    with pytest.raises(pc.PolymatroidError) as err:
        pc.Polymatroid([0, 2, 2, 1])
    assert err.value.axiom in ("monotonicity", "submodularity")


def test_table_length_must_be_power_of_two():
    with pytest.raises(pc.PolymatroidError):
        pc.Polymatroid([0, 1, 2])


def test_closure():
    P = pc.Polymatroid(P2)
    assert P.closure(0) == 0
    assert P.closure(2) == 3        # {1} has the rank of E
    assert P.closure(1) == 1
    # idempotent, extensive, rank-preserving
    for A in range(4):
        c = P.closure(A)
        assert c & A == A
        assert P.closure(c) == c
        assert P.rank(c) == P.rank(A)


def test_boolean_closure_is_identity():
    B = pc.boolean_polymatroid(pc.ProjectionMap((1, 2)))
    for A in range(4):
        assert B.closure(A) == A


def test_flats():
    assert pc.Polymatroid(P2).flats() == (0, 1, 3)
    assert pc.Polymatroid(P3).flats() == (0, 1, 2, 3)
    B = pc.boolean_polymatroid(pc.ProjectionMap((1, 1, 1, 1)))
    assert len(B.flats()) == 16


def test_flat_lattice_join_meet():
    P = pc.Polymatroid(P3)
    L = P.flat_lattice()
    assert L.bottom == 0 and L.top == 3
    assert L.join(1, 2) == 3
    assert L.meet(1, 2) == 0
    for f in L.flats:
        for g in L.flats:
            assert L.join(f, g) == P.closure(f | g)
            assert L.meet(f, g) == (f & g)
            assert L.meet(f, g) in L


def test_restriction():
    P = pc.Polymatroid(P2)
    R = P.restriction(1)
    assert R.rank_table == (0, 1)
    assert pc.Polymatroid(P3).restriction(3).rank_table == tuple(P3)
    with pytest.raises(pc.PolymatroidError):
        P.restriction(2)


def test_restriction_lattice_is_interval():
    P = pc.Polymatroid(P3)
    for F in P.flats():
        sub = P.restriction(F)
        # reindex the restricted flats back into the original ground set
        els = [i for i in range(P.n) if F >> i & 1]
        back = set()
        for f in sub.flats():
            mask = 0
            for j, e in enumerate(els):
                if f >> j & 1:
                    mask |= 1 << e
            back.add(mask)
        assert back == set(P.flat_lattice().interval_below(F))


def test_direct_sum():
    S = pc.Polymatroid([0, 1]).direct_sum(pc.Polymatroid([0, 2]))
    assert S.rank_table == (0, 1, 2, 3)
    P = pc.Polymatroid(P1)
    assert P.direct_sum(P).rank_table == tuple(P4)
    empty = pc.Polymatroid([0])
    assert P.direct_sum(empty).rank_table == tuple(P1)


def test_direct_sum_lattice_is_product():
    A = pc.Polymatroid([0, 1])
    B = pc.Polymatroid([0, 2])
    S = A.direct_sum(B)
    product = {fa | (fb << A.n) for fa in A.flats() for fb in B.flats()}
    assert set(S.flats()) == product


def test_boolean_polymatroid_tables():
    assert boolean_table((1, 1)) == [0, 1, 1, 2]
    assert boolean_table((2,)) == [0, 2]
    B = pc.boolean_polymatroid(pc.ProjectionMap((1, 2)))
    # modular: submodularity holds with equality
    for a in range(4):
        for b in range(4):
            assert B.rank(a | b) + B.rank(a & b) == B.rank(a) + B.rank(b)


def test_projection_map():
    proj = pc.ProjectionMap((1, 2))
    assert proj.n == 2 and proj.m == 3
    assert proj.fiber_masks == (0b001, 0b110)
    assert proj.preimage(0b10) == 0b110
    assert proj.image(0b100) == 0b10
    assert proj.fiber_of[2] == 1
    with pytest.raises(Exception):
        pc.ProjectionMap((0, 1))


def test_immutability():
    P = pc.Polymatroid(P1)
    with pytest.raises(AttributeError):
        P.n = 5
