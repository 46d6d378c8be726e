"""Inner and outer polytope bounds on the set of ordered one-body spectra.

The inner bound (`p2_polytope`) is the cone at the ground-state spectrum over
the stabilizer-group momentum polytope of the doubly excited space, cut by
the positive Weyl chamber. The stabilizer polytope is resolved by a strategy
dispatch: torus hull, root-distinct hull, single dominant weight, or the
worked reductions to smaller systems (two-particle chains, two-fermion
chains, the three-fermion systems on six and seven modes, the 2x2x3 system).
The outer bound (`outer_cone`) is the cone at the ground state over all
weights at least two excitations away, cut by the chamber.

`reference_polytope` transcribes the known closed-form answers for the
catalog systems, used as ground truth in validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .excitations import excitation_layers, is_root_distinct, pairwise_root_adjacent
from .lie import chamber_from_positive_roots
from .ratgeom import (
    HPolytope,
    RatVec,
    VPolytope,
    cone_hull,
    contains,
    dot,
    extreme_points,
    hrep_to_vrep,
    intersect,
    polytopes_equal,
    vec,
    vrep_to_hrep,
)
from .scenarios import (
    Scenario,
    UnsupportedScenario,
    highest_weight,
    is_minuscule,
    lambda_partition,
    scenario_chamber,
)

HALF = Fraction(1, 2)


class NotInCatalog(ValueError):
    """No closed-form reference polytope is recorded for this scenario."""


@dataclass(frozen=True)
class StabilizerProfile:
    """Root data of the ground-state stabilizer: delta_zero^lambda and its chamber."""

    roots: tuple[tuple, ...]
    positive_roots: tuple[tuple, ...]
    chamber: HPolytope


def stabilizer_profile(s: Scenario) -> StabilizerProfile:
    part = lambda_partition(s)
    positives = tuple(
        a for a in part.delta_zero if next(x for x in a if x != 0) > 0
    )
    return StabilizerProfile(
        part.delta_zero, positives, chamber_from_positive_roots(positives, s.rank)
    )


def _hull_cut(points, ch: HPolytope) -> VPolytope:
    """conv(points) intersected with a chamber, as canonical vertices."""
    hull = vrep_to_hrep(extreme_points(points))
    return hrep_to_vrep(intersect(hull, ch))


def _weight(s: Scenario, key) -> RatVec:
    return vec(s.key_weight(tuple(key)))


def _mid(a, b) -> tuple:
    return tuple((Fraction(x) + Fraction(y)) / 2 for x, y in zip(a, b))


def _embed(vertices, prefix_map) -> list[tuple]:
    return [prefix_map(v) for v in vertices]


def stabilizer_n2_polytope(s: Scenario) -> VPolytope:
    """Momentum polytope of the doubly excited space under the stabilizer group.

    Strategies, in order: abelian stabilizer (weight hull), root-distinct
    layer (hull cut by the stabilizer chamber), pairwise root-adjacent layer
    (the unique dominant weight), then the per-scenario reductions.
    Raises UnsupportedScenario outside the dispatch table.
    """
    layers = excitation_layers(s)
    if len(layers.layers) < 3:
        raise UnsupportedScenario(f"{s}: no doubly excited states")
    lam2 = layers.layers[2]
    prof = stabilizer_profile(s)

    if not prof.roots:
        return extreme_points(lam2)
    if is_root_distinct(lam2, prof.roots):
        return _hull_cut(lam2, prof.chamber)
    if pairwise_root_adjacent(lam2, prof.roots):
        dominant = [w for w in lam2 if contains(prof.chamber, vec(w)).inside]
        if len(dominant) == 1:
            return extreme_points(dominant)

    if s.kind == "dist":
        return _stabilizer_dist(s)
    if s.kind == "fermions":
        return _stabilizer_fermions(s)
    if s.kind == "bosons":
        return _stabilizer_bosons(s)
    raise UnsupportedScenario(
        f"{s}: doubly excited space not root-distinct, not pairwise "
        "root-adjacent, and no reduction is known"
    )


def _stabilizer_dist(s: Scenario) -> VPolytope:
    dims = s.dims
    if len(dims) == 2:
        # two particles: the doubly excited space is the (M-1) x (N-1) system
        sub = Scenario("dist", (dims[0] - 1, dims[1] - 1))
        sub_p2 = p2_polytope(sub)

        def embed(v):
            m = dims[0] - 1
            return (Fraction(0),) + tuple(v[:m]) + (Fraction(0),) + tuple(v[m:])

        return extreme_points(_embed(sub_p2.vertices, embed))
    if dims == (2, 2, 3):
        # triangle of the two coupled qubit-times-qutrit components,
        # joined with the point component
        tri = [
            _weight(s, (1, 2, 2)),
            _weight(s, (2, 1, 2)),
            _mid(_weight(s, (2, 1, 2)), _weight(s, (1, 2, 3))),
        ]
        return join_with_point(_weight(s, (2, 2, 1)), extreme_points(tri))
    raise UnsupportedScenario(f"{s}: no reduction for this shape")


def _stabilizer_fermions(s: Scenario) -> VPolytope:
    L, N = s.dims
    if L == 2:
        sub = p2_polytope(Scenario("fermions", (2, N - 2)))
        return extreme_points(
            _embed(sub.vertices, lambda v: (Fraction(0), Fraction(0)) + tuple(v))
        )
    prof = stabilizer_profile(s)
    if (L, N) == (3, 6):
        # the doubly excited space is two distinguishable particles on three
        # levels; its spectra trace the root-distinct diagonal family
        gens = [_weight(s, k) for k in ((1, 4, 5), (2, 4, 6), (3, 5, 6))]
        return _hull_cut(gens, prof.chamber)
    if (L, N) == (3, 7):
        # second reduction step: a three-qubit block joined with a point
        e246 = _weight(s, (2, 4, 6))
        qubit_block = [
            e246,
            _mid(e246, _weight(s, (2, 5, 7))),
            _mid(e246, _weight(s, (3, 4, 7))),
            _mid(e246, _weight(s, (3, 5, 6))),
            _mid(e246, _weight(s, (3, 5, 7))),
        ]
        gens = [_weight(s, (1, 4, 5)), _weight(s, (1, 6, 7))] + qubit_block
        return _hull_cut(gens, prof.chamber)
    raise UnsupportedScenario(f"{s}: no reduction for {L} fermions on {N} modes")


def _stabilizer_bosons(s: Scenario) -> VPolytope:
    L, N = s.dims
    sub = p2_polytope(Scenario("bosons", (2, N - 1)))
    return extreme_points(
        _embed(sub.vertices, lambda v: (Fraction(L - 2),) + tuple(v))
    )


def p2_hull_form(s: Scenario, stab: Optional[VPolytope] = None) -> VPolytope:
    """conv(ground spectrum, stabilizer polytope) cut by the chamber."""
    lam = vec(highest_weight(s))
    stab = stab or stabilizer_n2_polytope(s)
    return _hull_cut([lam, *stab.vertices], scenario_chamber(s))


def p2_cone_form(s: Scenario, stab: Optional[VPolytope] = None) -> VPolytope:
    """Cone at the ground spectrum over the stabilizer polytope, cut by the chamber."""
    lam = vec(highest_weight(s))
    stab = stab or stabilizer_n2_polytope(s)
    cone = cone_hull(lam, stab)
    return hrep_to_vrep(intersect(cone.hpoly, scenario_chamber(s)))


@lru_cache(maxsize=None)
def p2_polytope(s: Scenario) -> VPolytope:
    """The inner bound from doubly excited states, as exact vertices.

    Always the cone form (the defining construction). The hull form
    conv(lambda, stabilizer polytope) cut by the chamber agrees with it for
    most all-weights-extreme scenarios but is strictly smaller whenever some
    ray exits the chamber beyond the stabilizer polytope (bosons, and qubit
    systems with five or more parties, where the ray to the uniform average
    of the doubly excited weights exits at t = L/4); `p2_hull_form` stays
    available for the comparison.
    """
    layers = excitation_layers(s)
    if len(layers.layers) < 3:
        return extreme_points([vec(highest_weight(s))])
    return p2_cone_form(s, stabilizer_n2_polytope(s))


def outer_cone(s: Scenario) -> HPolytope:
    """Cone at the ground spectrum over every weight two or more excitations
    away, cut by the chamber: an outer bound on the ordered-spectra set."""
    layers = excitation_layers(s)
    lam = vec(highest_weight(s))
    far = layers.union_from(2)
    ch = scenario_chamber(s)
    if not far:
        dim = s.rank
        eqs = []
        for i, x in enumerate(lam):
            normal = tuple(Fraction(int(i == j)) for j in range(dim))
            eqs.append((normal, Fraction(x)))
        return HPolytope.from_constraints(dim, [], eqs)
    cone = cone_hull(lam, extreme_points(far))
    return intersect(cone.hpoly, ch)


def join_with_point(pt, p: VPolytope) -> VPolytope:
    """Momentum image of a direct sum with a one-dimensional component."""
    if len(tuple(pt)) != p.dim:
        raise ValueError("dimension mismatch between point and polytope")
    return extreme_points([vec(pt), *p.vertices])


def chamber_exit_parameter(s: Scenario, point) -> Optional[Fraction]:
    """Largest t with (1-t) lambda + t point still in the chamber (None if unbounded)."""
    lam = vec(highest_weight(s))
    direction = tuple(Fraction(x) - y for x, y in zip(vec(point), lam))
    best = None
    for n, b in scenario_chamber(s).inequalities:
        slope = dot(n, direction)
        if slope < 0:
            t = (b - dot(n, lam)) / slope
            best = t if best is None else min(best, t)
    return best


# ---------------------------------------------------------------------------
# reference catalog


def _two_particle_reference(dims) -> HPolytope:
    m, n = dims
    small, large = min(m, n), max(m, n)
    r = m + n
    eqs = []
    for i in range(small):  # the two ordered spectra agree entrywise
        row = [Fraction(0)] * r
        row[i], row[m + i] = Fraction(1), Fraction(-1)
        eqs.append((tuple(row), Fraction(0)))
    for i in range(small, large):  # excess levels of the larger block are empty
        row = [Fraction(0)] * r
        row[(m + i) if n == large else i] = Fraction(1)
        eqs.append((tuple(row), Fraction(0)))
    norm = [Fraction(1)] * m + [Fraction(0)] * n
    eqs.append((tuple(norm), Fraction(1)))
    base = HPolytope.from_constraints(r, [], eqs)
    return intersect(base, scenario_chamber(Scenario("dist", dims)))


def _qubit_reference(L: int) -> HPolytope:
    r = 2 * L
    ineqs = []
    for k in range(L):
        row = [Fraction(0)] * r
        for l in range(L):
            row[2 * l + 1] = Fraction(-1) if l == k else Fraction(1)
        ineqs.append((tuple(row), Fraction(0)))
    eqs = []
    for k in range(L):
        row = [Fraction(0)] * r
        row[2 * k] = row[2 * k + 1] = Fraction(1)
        eqs.append((tuple(row), Fraction(1)))
    base = HPolytope.from_constraints(r, ineqs, eqs)
    return intersect(base, scenario_chamber(Scenario("dist", (2,) * L)))


def _two_fermion_reference(N: int) -> HPolytope:
    eqs = []
    for k in range(0, N - 1, 2):
        row = [Fraction(0)] * N
        row[k], row[k + 1] = Fraction(1), Fraction(-1)
        eqs.append((tuple(row), Fraction(0)))
    if N % 2:
        row = [Fraction(0)] * N
        row[N - 1] = Fraction(1)
        eqs.append((tuple(row), Fraction(0)))
    eqs.append((tuple(Fraction(1) for _ in range(N)), Fraction(2)))
    base = HPolytope.from_constraints(N, [], eqs)
    return intersect(base, scenario_chamber(Scenario("fermions", (2, N))))


_FERMI_36_VERTICES = (
    (1, 1, 1, 0, 0, 0),
    (1, HALF, HALF, HALF, HALF, 0),
    (Fraction(3, 4), Fraction(3, 4), HALF, HALF, Fraction(1, 4), Fraction(1, 4)),
    (HALF, HALF, HALF, HALF, HALF, HALF),
)

_FERMI_37_CORE = (
    (1, 1, 1, 0, 0, 0, 0),
    (Fraction(3, 7),) * 7,
    (Fraction(2, 3), Fraction(2, 3)) + (Fraction(1, 3),) * 5,
    (
        Fraction(5, 7), Fraction(5, 7), Fraction(3, 7), Fraction(3, 7),
        Fraction(3, 7), Fraction(1, 7), Fraction(1, 7),
    ),
    (HALF, HALF, HALF, HALF, HALF, Fraction(1, 4), Fraction(1, 4)),
    (Fraction(3, 5),) * 4 + (Fraction(1, 5),) * 3,
)


def _fock_reference(s: Scenario) -> VPolytope:
    N = s.dims[0]
    lam = vec(highest_weight(s))
    if N == 1:
        return extreme_points([lam])
    if N in (2, 3):
        return extreme_points([lam])
    if N == 4:
        return extreme_points([lam, vec((0,) * 4)])
    if N == 5:
        return extreme_points([lam, vec((HALF, 0, 0, 0, 0))])
    raise NotInCatalog(f"{s}: no closed-form result recorded for N > 5")


def reference_polytope(s: Scenario) -> Union[VPolytope, HPolytope]:
    """The known closed-form spectral polytope for catalog scenarios."""
    if s.kind == "dist":
        if len(s.dims) == 2:
            return _two_particle_reference(s.dims)
        if all(n == 2 for n in s.dims):
            return _qubit_reference(len(s.dims))
        if s.dims == (2, 2, 3):
            extra = [
                (HALF, HALF, Fraction(3, 4), Fraction(1, 4), HALF, Fraction(1, 4), Fraction(1, 4)),
                (Fraction(3, 4), Fraction(1, 4), HALF, HALF, HALF, Fraction(1, 4), Fraction(1, 4)),
            ]
            return extreme_points([*p2_polytope(s).vertices, *map(vec, extra)])
        raise NotInCatalog(f"{s}: no recorded full polytope")
    if s.kind == "fermions":
        L, N = s.dims
        if L == 2:
            return _two_fermion_reference(N)
        if (L, N) == (3, 6):
            return extreme_points([vec(v) for v in _FERMI_36_VERTICES])
        if (L, N) == (3, 7):
            pts = [vec(v) for v in _FERMI_37_CORE]
            for v in _FERMI_36_VERTICES:
                pts.append(vec(tuple(v) + (0,)))
            for v in hrep_to_vrep(_two_fermion_reference(6)).vertices:
                pts.append(vec((1,) + tuple(v)))
            return extreme_points(pts)
        raise NotInCatalog(f"{s}: no recorded full polytope")
    if s.kind == "bosons":
        L, N = s.dims
        corners = []
        for k in range(N):
            v = [Fraction(0)] * N
            v[k] = Fraction(L)
            corners.append(tuple(v))
        simplex = vrep_to_hrep(extreme_points(corners))
        return intersect(simplex, scenario_chamber(s))
    if s.kind in ("fock-even", "fock-odd"):
        return _fock_reference(s)
    raise NotInCatalog(str(s))


# ---------------------------------------------------------------------------
# report


@dataclass(frozen=True)
class BoundsReport:
    scenario: str
    p2: VPolytope
    outer: HPolytope
    reference: Optional[Union[VPolytope, HPolytope]]
    minuscule: bool
    spherical: Optional[bool]  # None when not established by the catalog
    p2_equals_reference: Optional[bool]


def _known_spherical(s: Scenario) -> Optional[bool]:
    if s.kind == "dist" and len(s.dims) == 2:
        return True
    if s.kind == "fermions" and s.dims[0] == 2:
        return True
    if s.kind in ("fock-even", "fock-odd"):
        return True if s.dims[0] <= 5 else False
    return None


def bounds_report(s: Scenario) -> BoundsReport:
    p2 = p2_polytope(s)
    outer = outer_cone(s)
    try:
        ref = reference_polytope(s)
    except NotInCatalog:
        ref = None
    equal = polytopes_equal(p2, ref) if ref is not None else None
    return BoundsReport(
        scenario=str(s),
        p2=p2,
        outer=outer,
        reference=ref,
        minuscule=is_minuscule(s),
        spherical=_known_spherical(s),
        p2_equals_reference=equal,
    )
