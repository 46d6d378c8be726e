"""Inner/outer bound construction against the transcribed catalog data."""

from fractions import Fraction

import pytest

from specpoly.bounds import (
    NotInCatalog,
    bounds_report,
    chamber_exit_parameter,
    join_with_point,
    outer_cone,
    p2_cone_form,
    p2_hull_form,
    p2_polytope,
    reference_polytope,
    stabilizer_n2_polytope,
    stabilizer_profile,
)
from specpoly.ratgeom import (
    HPolytope,
    canonical_vertices,
    contains,
    extreme_points,
    hrep_to_vrep,
    polytopes_equal,
    vec,
    vrep_to_hrep,
)
from specpoly.scenarios import (
    Scenario,
    UnsupportedScenario,
    highest_weight,
    parse_scenario,
)

F = Fraction
H = F(1, 2)


def S(text):
    return parse_scenario(text)


def vset(p):
    return set(canonical_vertices(p))


# -- stabilizer polytope -------------------------------------------------------


def test_stabilizer_fermions_36_schmidt_triangle():
    got = stabilizer_n2_polytope(S("fermions:3@6"))
    expected = {
        vec((1, 0, 0, 1, 1, 0)),
        vec((H, H, 0, 1, H, H)),
        vec((F(1, 3),) * 3 + (F(2, 3),) * 3),
    }
    assert set(got.vertices) == expected


def test_stabilizer_fock_even_5_single_point():
    got = stabilizer_n2_polytope(S("fock-even:5"))
    assert got.vertices == (vec((H, -H, -H, -H, -H)),)


def test_stabilizer_fock_odd_5_single_point():
    got = stabilizer_n2_polytope(S("fock-odd:5"))
    assert got.vertices == (vec((H, -H, -H, -H, H)),)


def test_stabilizer_three_qubits_torus_hull():
    got = stabilizer_n2_polytope(S("dist:2x2x2"))
    lam2 = {
        vec((1, 0, 0, 1, 0, 1)),
        vec((0, 1, 1, 0, 0, 1)),
        vec((0, 1, 0, 1, 1, 0)),
    }
    assert set(got.vertices) == lam2


def test_stabilizer_223_join():
    got = stabilizer_n2_polytope(S("dist:2x2x3"))
    assert len(got.vertices) == 4
    assert vec((0, 1, 0, 1, 1, 0, 0)) in got.vertices  # the point component


def test_stabilizer_unsupported():
    with pytest.raises(UnsupportedScenario):
        stabilizer_n2_polytope(S("fermions:3@8"))
    with pytest.raises(UnsupportedScenario):
        stabilizer_n2_polytope(S("fock-even:6"))
    with pytest.raises(UnsupportedScenario):
        stabilizer_n2_polytope(S("dist:2x3x3"))


def test_stabilizer_profile_chamber_contains_full_chamber():
    # any point of the scenario chamber satisfies the stabilizer chamber
    from specpoly.scenarios import scenario_chamber, support

    for text in ("fermions:3@6", "fock-odd:5", "dist:2x2x3"):
        s = S(text)
        prof = stabilizer_profile(s)
        full = scenario_chamber(s)
        probe = [vec(w) for w in support(s)]
        probe += [
            tuple(sum(col) / len(col) for col in zip(*pair))
            for pair in zip(probe, probe[1:])
        ]
        for pt in probe:
            if contains(full, pt).inside:
                assert contains(prof.chamber, pt).inside


# -- p2 catalog -----------------------------------------------------------------


def test_p2_fermions_36_paper_vertices():
    got = p2_polytope(S("fermions:3@6"))
    assert set(got.vertices) == {
        vec((1, 1, 1, 0, 0, 0)),
        vec((1, H, H, H, H, 0)),
        vec((F(3, 4), F(3, 4), H, H, F(1, 4), F(1, 4))),
        vec((H, H, H, H, H, H)),
    }


def test_p2_fock_even_4_segment():
    got = p2_polytope(S("fock-even:4"))
    assert set(got.vertices) == {vec((H, H, H, H)), vec((0, 0, 0, 0))}


def test_p2_fock_small_points():
    for text, pt in [
        ("fock-even:2", (H, H)),
        ("fock-odd:2", (H, -H)),
        ("fock-even:3", (H, H, H)),
        ("fock-odd:3", (H, H, -H)),
    ]:
        assert p2_polytope(S(text)).vertices == (vec(pt),)


def test_p2_bosons_simplex_cut():
    got = p2_polytope(S("bosons:2@2"))
    assert set(got.vertices) == {vec((2, 0)), vec((1, 1))}
    got = p2_polytope(S("bosons:4@3"))
    assert set(got.vertices) == {
        vec((4, 0, 0)),
        vec((2, 2, 0)),
        vec((F(4, 3), F(4, 3), F(4, 3))),
    }


def test_p2_two_particle_23():
    got = p2_polytope(S("dist:2x3"))
    assert set(got.vertices) == {
        vec((1, 0, 1, 0, 0)),
        vec((H, H, H, H, 0)),
    }


def test_p2_contains_highest_weight_as_vertex():
    for text in (
        "fermions:3@6", "fermions:2@5", "dist:2x2x3", "dist:2x2x2",
        "bosons:3@2", "fock-even:4", "fock-odd:5",
    ):
        s = S(text)
        assert vec(highest_weight(s)) in p2_polytope(s).vertices


def test_p2_223_has_seven_vertices_including_direct_construction():
    # the state (1/2)|111> + (1/2)(|221> + |122> + |212>) has root-distinct
    # support, so its momentum image is exactly the diagonal point below;
    # the six-vertex catalog display misses it (see reference tests)
    got = p2_polytope(S("dist:2x2x3"))
    direct = vec((H, H, H, H, H, H, 0))
    assert direct in got.vertices
    assert len(got.vertices) == 7


# -- reference catalog -----------------------------------------------------------


def test_reference_two_particle():
    ref = reference_polytope(S("dist:2x3"))
    assert polytopes_equal(ref, p2_polytope(S("dist:2x3")))


def test_reference_fermi_37_families():
    ref = reference_polytope(S("fermions:3@7"))
    verts = vset(ref)
    assert vec((1, F(1, 3), F(1, 3), F(1, 3), F(1, 3), F(1, 3), F(1, 3))) in verts
    assert vec((F(3, 4), F(3, 4), H, H, F(1, 4), F(1, 4), 0)) in verts
    assert vec((F(3, 7),) * 7) in verts


def test_reference_223_strict_inclusion():
    s = S("dist:2x2x3")
    ref = reference_polytope(s)
    p2 = p2_polytope(s)
    assert not polytopes_equal(ref, p2)
    extra = vset(ref) - set(p2.vertices)
    assert extra == {
        vec((H, H, F(3, 4), F(1, 4), H, F(1, 4), F(1, 4))),
        vec((F(3, 4), F(1, 4), H, H, H, F(1, 4), F(1, 4))),
    }
    refH = ref if isinstance(ref, HPolytope) else vrep_to_hrep(ref)
    for v in p2.vertices:
        assert contains(refH, v).violation == 0


def test_reference_not_in_catalog():
    for text in ("fermions:4@8", "fock-even:6", "dist:3x3x3"):
        with pytest.raises(NotInCatalog):
            reference_polytope(S(text))


def test_catalog_equalities_p2_equals_reference():
    equal_cases = [
        "dist:2x2", "dist:2x3", "dist:3x4",
        "dist:2x2x2", "dist:2x2x2x2",
        "fermions:2@4", "fermions:2@5", "fermions:2@6", "fermions:2@7",
        "fermions:3@6", "fermions:3@7",
        "bosons:2@2", "bosons:3@2", "bosons:2@3", "bosons:4@3",
        "fock-even:2", "fock-even:3", "fock-even:4", "fock-even:5",
        "fock-odd:2", "fock-odd:3", "fock-odd:4", "fock-odd:5",
    ]
    for text in equal_cases:
        s = S(text)
        assert polytopes_equal(p2_polytope(s), reference_polytope(s)), text


# -- outer cone -------------------------------------------------------------------


def test_outer_cone_two_particle_22_equals_polytope():
    s = S("dist:2x2")
    outer = outer_cone(s)
    assert polytopes_equal(outer, reference_polytope(s))


def test_outer_cone_three_qubits_equals_polytope():
    s = S("dist:2x2x2")
    assert polytopes_equal(outer_cone(s), reference_polytope(s))


def test_outer_contains_p2_vertices():
    for text in (
        "fermions:3@6", "fermions:3@7", "fermions:2@6", "dist:2x2x3",
        "dist:2x2x2", "bosons:2@3", "bosons:4@3", "fock-even:4",
        "fock-even:5", "fock-odd:5",
    ):
        s = S(text)
        outer = outer_cone(s)
        for v in p2_polytope(s).vertices:
            assert contains(outer, v).violation == 0, (text, v)


def test_outer_degenerate_point():
    s = S("fock-even:2")
    outer = outer_cone(s)
    assert contains(outer, vec((H, H))).inside
    assert not contains(outer, vec((H, 0))).inside


# -- join --------------------------------------------------------------------------


def test_join_with_point():
    seg = extreme_points([(1, 0), (0, 1)])
    tri = join_with_point((0, 0), seg)
    assert set(tri.vertices) == {vec((0, 0)), vec((1, 0)), vec((0, 1))}
    pt = extreme_points([(2, 2)])
    assert join_with_point((2, 2), pt).vertices == (vec((2, 2)),)


# -- minuscule consistency / boson cone behaviour ------------------------------------


def test_minuscule_cone_equals_hull():
    for text in (
        "fermions:3@6", "fermions:3@7", "fermions:2@6", "dist:2x2x2",
        "dist:2x2x2x2", "dist:2x2x3", "fock-even:4", "fock-even:5", "fock-odd:5",
    ):
        s = S(text)
        stab = stabilizer_n2_polytope(s)
        assert p2_cone_form(s, stab).vertices == p2_hull_form(s, stab).vertices


def test_five_qubit_cone_strictly_beyond_hull():
    # the ray to the uniform average of the doubly excited weights exits the
    # chamber at t = L/4 > 1, so the cone picks up the fully mixed point
    # (certified physical by the L-qubit GHZ state)
    s = S("dist:2x2x2x2x2")
    stab = stabilizer_n2_polytope(s)
    cone = set(p2_cone_form(s, stab).vertices)
    hull = set(p2_hull_form(s, stab).vertices)
    assert cone - hull == {vec((H,) * 10)}
    assert hull < cone
    uniform = tuple(
        sum(col) / len(col) for col in zip(*stab.vertices)
    )
    assert chamber_exit_parameter(s, uniform) == F(5, 4)


def test_boson_cone_exit_parameters():
    # rays from the ground spectrum leave the chamber at t >= 1 for L >= 4
    s = S("bosons:4@2")
    stab = stabilizer_n2_polytope(s)
    assert all(chamber_exit_parameter(s, v) >= 1 for v in stab.vertices)
    s = S("bosons:4@3")
    stab = stabilizer_n2_polytope(s)
    ts = [chamber_exit_parameter(s, v) for v in stab.vertices]
    assert min(ts) >= 1 and max(ts) > 1


def test_boson_cone_strictly_beyond_hull_43():
    s = S("bosons:4@3")
    stab = stabilizer_n2_polytope(s)
    hull = p2_hull_form(s, stab)
    cone = p2_cone_form(s, stab)
    hullH = vrep_to_hrep(hull)
    assert all(contains(hullH, v).violation == 0 for v in hull.vertices)
    assert any(not contains(hullH, v).inside for v in cone.vertices)
    coneH = vrep_to_hrep(cone)
    assert all(contains(coneH, v).inside for v in hull.vertices)


# -- report -------------------------------------------------------------------------


def test_bounds_report_flags():
    rep = bounds_report(S("fermions:3@6"))
    assert rep.minuscule and rep.p2_equals_reference
    rep = bounds_report(S("dist:2x2x3"))
    assert rep.minuscule and rep.p2_equals_reference is False
    rep = bounds_report(S("bosons:2@3"))
    assert not rep.minuscule and rep.p2_equals_reference
    assert rep.spherical is None
    rep = bounds_report(S("fermions:2@5"))
    assert rep.spherical is True
