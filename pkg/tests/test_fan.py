import pytest

import polychow as pc
from conftest import P1, P2, P3, U34, U34_MIN_BUILDING, boolean_table


def fan_of(table, members=None):
    P = pc.Polymatroid(table)
    G = None if members is None else pc.BuildingSet(P, members)
    return P, pc.bergman_fan(P, G)


def test_p1_fan_is_a_line():
    P, fan = fan_of(P1)
    # lift has two elements, quotient dimension 1, rays +1 and -1
    assert fan.ambient_dim == 1
    assert set(fan.rays) == {(1,), (-1,)}
    assert fan.max_dim == 1
    assert len(fan.maximal_cones()) == 2


def test_p2_fan_three_rays():
    P, fan = fan_of(P2)
    assert fan.ambient_dim == 2
    assert len(fan.rays) == 3
    assert fan.max_dim == 1
    assert len(fan.maximal_cones()) == 3
    assert set(fan.rays) == {(1, 0), (0, 1), (-1, -1)}


def test_p3_fan_shape():
    P, fan = fan_of(P3)
    assert fan.ambient_dim == 3
    assert len(fan.rays) == 6
    assert fan.max_dim == 2
    assert len(fan.maximal_cones()) == 8


def test_cross_construction_maximal():
    for table in (P1, P2, P3, U34):
        P = pc.Polymatroid(table)
        assert pc.bergman_fan(P) == pc.maximal_bergman_fan_direct(P)


def test_boolean_third_route():
    for fibers in ((1, 1), (2,), (1, 2), (1, 1, 1), (2, 2)):
        proj = pc.ProjectionMap(fibers)
        P = pc.boolean_polymatroid(proj)
        assert pc.bergman_fan(P) == pc.boolean_bergman_fan(proj)
        assert pc.boolean_bergman_fan(proj) == pc.maximal_bergman_fan_direct(P)


def test_validators_on_fixture_fans():
    for table in (P1, P2, P3):
        P, fan = fan_of(table)
        checks = pc.validate_fan(fan, expected_max_dim=P.r - 1)
        assert all(checks.values()), checks


def test_validators_on_second_building_set():
    P, fan = fan_of(U34, U34_MIN_BUILDING)
    checks = pc.validate_fan(fan, expected_max_dim=2)
    assert all(checks.values()), checks


def test_balancing_weight_one():
    for table in (P2, P3, U34):
        P, fan = fan_of(table)
        assert pc.balancing_check(fan)


def test_unimodular_and_face_closed():
    P, fan = fan_of(P3)
    assert pc.is_unimodular(fan)
    assert pc.is_face_closed(fan)
    assert pc.pairwise_intersections_are_faces(fan)


def test_find_cone_examples():
    P, fan = fan_of(P2)
    # e_0 + e_{1 in the 2-fiber} is not in the support of U_{2,3}
    assert pc.find_cone(fan, (1, 1)) is None or not pc.cone_contains(
        fan, pc.find_cone(fan, (1, 1)), (1, 1))
    assert pc.in_support(fan, (1, 0))
    assert not pc.in_support(fan, (1, 1))
    assert pc.in_support(fan, (0, 0))


def test_cone_coordinates_roundtrip():
    P, fan = fan_of(P3)
    for cone in fan.maximal_cones():
        rays = fan.cone_rays(cone)
        point = tuple(sum(2 * r[i] + 3 * rays[-1][i] for r in rays)
                      for i in range(fan.ambient_dim))
        coords = pc.cone_coordinates(fan, cone, point)
        assert coords is not None and all(c >= 0 for c in coords)
        found = pc.find_cone(fan, point)
        assert found is not None and set(found) <= set(cone)


def test_refinement_of_coarser_building_set():
    P = pc.Polymatroid(U34)
    fine = pc.bergman_fan(P)
    coarse = pc.bergman_fan(P, pc.BuildingSet(P, U34_MIN_BUILDING))
    assert len(fine.rays) == 10   # 4 singleton flats + 6 pair flats
    assert len(coarse.rays) == 4  # the singleton flats; E gives no ray
    assert pc.refines(fine, coarse)
    assert pc.same_support(fine, coarse, trials=500)


def test_lift_fan_refined_by_boolean_fan_support_differs():
    P = pc.Polymatroid(P3)
    lifted = pc.bergman_fan(P)
    boolean = pc.boolean_bergman_fan(pc.ProjectionMap((2, 2)))
    # the boolean fan is complete; the lift fan is a proper subfan support
    assert not pc.same_support(boolean, lifted, trials=200)
    assert pc.is_complete(boolean)
    assert not pc.is_complete(lifted)


def test_sigma_p3_refines_u34_fan():
    # the fan of the lift of (0,2,2,3) with the lifted maximal building
    # set refines the fan of U_{3,4} with its minimal building set: both
    # have the same support (all of the tropical linear space)
    P3p = pc.Polymatroid(P3)
    fine = pc.bergman_fan(P3p)
    U = pc.Polymatroid(U34)
    coarse = pc.bergman_fan(U, pc.BuildingSet(U, U34_MIN_BUILDING))
    assert len(fine.rays) == 6
    assert pc.same_support(fine, coarse, trials=500)


def test_nested_set_fan_matches_bergman():
    P = pc.Polymatroid(P2)
    M, Gt = pc.lifted_building_set(P)
    fan = pc.nested_set_fan(Gt, M.full_mask, M.m)
    assert fan == pc.bergman_fan(P)
