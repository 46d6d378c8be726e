"""Dev scratch: compare construction routes for P2 against paper vertex data."""

from fractions import Fraction

from specpoly import ratgeom as rg
from specpoly.lie import chamber_from_positive_roots
from specpoly.scenarios import parse_scenario, highest_weight, lambda_partition, scenario_chamber
from specpoly.excitations import excitation_layers

F = Fraction


def stab_chamber(s):
    part = lambda_partition(s)
    pos = [a for a in part.delta_zero
           if any(x != 0 for x in a) and next(x for x in a if x != 0) > 0]
    return chamber_from_positive_roots(pos, s.rank)


def w(s, key):
    return rg.vec(s.key_weight(key))


def hull_cut(points, ch):
    hull_i, hull_e = rg._facets_from_generators([rg.vec(p) for p in points])
    inter = rg.intersect(rg.HPolytope(len(points[0]), tuple(hull_i), tuple(hull_e)), ch)
    return rg.hrep_to_vrep(inter)


# ---- fermions 3@6 -----------------------------------------------------------
s = parse_scenario("fermions:3@6")
lam = rg.vec(highest_weight(s))
gens = [w(s, (1, 4, 5)), w(s, (2, 4, 6)), w(s, (3, 5, 6))]
tchamber = scenario_chamber(s)

one_shot = hull_cut([lam] + gens, tchamber)
stab = hull_cut(gens, stab_chamber(s))
two_step = hull_cut([lam] + list(stab.vertices), tchamber)
paper = {
    rg.vec((1, 1, 1, 0, 0, 0)),
    rg.vec((1, F(1, 2), F(1, 2), F(1, 2), F(1, 2), 0)),
    rg.vec((F(3, 4), F(3, 4), F(1, 2), F(1, 2), F(1, 4), F(1, 4))),
    rg.vec((F(1, 2),) * 6),
}
print("3@6 stab verts:", stab.vertices)
print("3@6 one-shot == paper:", set(one_shot.vertices) == paper)
print("3@6 two-step == paper:", set(two_step.vertices) == paper)

# ---- fermions 3@7 -----------------------------------------------------------
s = parse_scenario("fermions:3@7")
lam = rg.vec(highest_weight(s))
e246 = w(s, (2, 4, 6))


def mid(a, b):
    return tuple((x + y) / 2 for x, y in zip(a, b))


qubit_family = [
    e246,
    mid(e246, w(s, (2, 5, 7))),
    mid(e246, w(s, (3, 4, 7))),
    mid(e246, w(s, (3, 5, 6))),
    mid(e246, w(s, (3, 5, 7))),
]
gens = [w(s, (1, 4, 5)), w(s, (1, 6, 7))] + qubit_family
tchamber = scenario_chamber(s)

one_shot = hull_cut([lam] + gens, tchamber)
stab = hull_cut(gens, stab_chamber(s))
two_step = hull_cut([lam] + list(stab.vertices), tchamber)

paper7 = {
    rg.vec((1, 1, 1, 0, 0, 0, 0)),
    rg.vec((F(3, 7),) * 7),
    rg.vec((F(2, 3), F(2, 3)) + (F(1, 3),) * 5),
    rg.vec((F(5, 7), F(5, 7), F(3, 7), F(3, 7), F(3, 7), F(1, 7), F(1, 7))),
    rg.vec((F(1, 2),) * 5 + (F(1, 4), F(1, 4))),
    rg.vec((F(3, 5),) * 4 + (F(1, 5),) * 3),
    rg.vec((1, F(1, 2), F(1, 2), F(1, 2), F(1, 2), 0, 0)),
    rg.vec((F(3, 4), F(3, 4), F(1, 2), F(1, 2), F(1, 4), F(1, 4), 0)),
    rg.vec((F(1, 2),) * 6 + (0,)),
    rg.vec((1, F(1, 3), F(1, 3), F(1, 3), F(1, 3), F(1, 3), F(1, 3))),
}
print("3@7 stab verts:", len(stab.vertices))
print("3@7 one-shot == paper:", set(one_shot.vertices) == paper7)
print("3@7 two-step == paper:", set(two_step.vertices) == paper7)
if set(one_shot.vertices) != paper7:
    print("  one-shot extra:", set(one_shot.vertices) - paper7)
    print("  one-shot missing:", paper7 - set(one_shot.vertices))
if set(two_step.vertices) != paper7:
    print("  two-step extra:", set(two_step.vertices) - paper7)
    print("  two-step missing:", paper7 - set(two_step.vertices))

# ---- dist 2x2x3 --------------------------------------------------------------
s = parse_scenario("dist:2x2x3")
lam = rg.vec(highest_weight(s))
e221 = w(s, (2, 2, 1))
e122 = w(s, (1, 2, 2))
e123 = w(s, (1, 2, 3))
e212 = w(s, (2, 1, 2))
tri = [e122, e212, mid(e212, e123)]
gens = [e221] + tri
tchamber = scenario_chamber(s)
one_shot = hull_cut([lam] + gens, tchamber)
stab = hull_cut(gens, stab_chamber(s))
two_step = hull_cut([lam] + list(stab.vertices), tchamber)
paper223 = {
    lam,
    rg.vec((F(1, 2), F(1, 2), F(1, 2), F(1, 2), 1, 0, 0)),
    rg.vec((F(1, 2), F(1, 2), 1, 0, F(1, 2), F(1, 2), 0)),
    rg.vec((1, 0, F(1, 2), F(1, 2), F(1, 2), F(1, 2), 0)),
    rg.vec((F(1, 2), F(1, 2), F(1, 2), F(1, 2), F(1, 3), F(1, 3), F(1, 3))),
    rg.vec((F(2, 3), F(1, 3), F(2, 3), F(1, 3), F(1, 3), F(1, 3), F(1, 3))),
}
print("223 one-shot == paper:", set(one_shot.vertices) == paper223)
print("223 two-step == paper:", set(two_step.vertices) == paper223)
print("223 stab verts:", stab.vertices)
