"""Exact rational polyhedra: hulls, facets, vertex enumeration, cones.

Everything here runs on exact arithmetic (python ints and
``fractions.Fraction``); no floating point enters a geometric predicate.
Vertex and facet lists are kept canonical (deduplicated, lexicographically
sorted, canonically scaled), so two polytopes describe the same point set
iff their canonical vertex sets coincide.

The workhorse is a double-description pass over an integer inequality
matrix (`_extreme_rays`), used in both directions: points -> facets via the
polar cone, and facets -> vertices via homogenization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence, Union

RatVec = tuple[Fraction, ...]
Constraint = tuple[RatVec, Fraction]  # (normal, offset) meaning normal.x >= offset (or == for equalities)


class Empty(ValueError):
    """The described point set is empty."""


class Unbounded(ValueError):
    """The described point set is unbounded (contains a ray or a line)."""


class DegenerateCone(ValueError):
    """Cone apex lies in the affine hull of the base."""


class DimensionMismatch(ValueError):
    """Operands live in different ambient dimensions."""


# ---------------------------------------------------------------------------
# rational vectors


def vec(values: Iterable) -> RatVec:
    """Coerce an iterable of numbers (ints, Fractions, 'p/q' strings) to a RatVec."""
    return tuple(Fraction(v) for v in values)


def dot(a: Sequence, b: Sequence) -> Fraction:
    if len(a) != len(b):
        raise DimensionMismatch(f"vectors of length {len(a)} and {len(b)}")
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), Fraction(0))


def _check_dims(points: Sequence[Sequence]) -> int:
    dims = {len(p) for p in points}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed dimensions {sorted(dims)}")
    return dims.pop()


def _to_int_vec(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector by a positive integer so entries are coprime ints."""
    fracs = [Fraction(x) for x in v]
    denom = 1
    for x in fracs:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


# ---------------------------------------------------------------------------
# exact linear algebra on Fraction matrices (row lists)


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rref rows, pivot column indices)."""
    mat = [list(map(Fraction, r)) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def _rank(rows: Sequence[Sequence]) -> int:
    return len(_rref([list(r) for r in rows])[0])


def _kernel_basis(rows: Sequence[Sequence]) -> list[RatVec]:
    """Basis of {x : r.x = 0 for every row r}."""
    if not rows:
        raise ValueError("kernel of an empty system is the whole space; pass dim explicitly")
    ncols = len(rows[0])
    rref, pivots = _rref([list(r) for r in rows])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            x[pc] = -rref[ri][fc]
        basis.append(tuple(x))
    return basis


def _solve(rows: Sequence[Sequence], rhs: Sequence) -> RatVec | None:
    """One exact solution of rows.x = rhs, or None if inconsistent."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    rref, pivots = _rref(aug)
    x = [Fraction(0)] * ncols
    for ri, pc in enumerate(pivots):
        if pc == ncols:  # pivot in the rhs column: 0 = 1
            return None
        x[pc] = rref[ri][ncols]
    return tuple(x)


# ---------------------------------------------------------------------------
# double description


def _extreme_rays(rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone {x : r.x >= 0 for all r in rows}.

    Requires rank(rows) == ambient dimension (pointedness). Rows are
    processed in lexicographic order, so the result is deterministic.
    """
    rows = sorted(set(rows))
    d = len(rows[0])
    # greedy initial basis of d independent rows
    basis_rows: list[tuple[int, ...]] = []
    chosen: list[int] = []
    for i, r in enumerate(rows):
        if _rank(basis_rows + [r]) > len(basis_rows):
            basis_rows.append(r)
            chosen.append(i)
            if len(basis_rows) == d:
                break
    if len(basis_rows) < d:
        raise ValueError("cone is not pointed (rank deficient inequality system)")
    rest = [rows[i] for i in range(len(rows)) if i not in chosen]

    # rays of the simplicial cone {x : B x >= 0}: columns of B^{-1}
    rays: list[tuple[int, ...]] = []
    tight: list[int] = []  # bitmask over processed rows
    full_mask = (1 << d) - 1
    for j in range(d):
        e = [Fraction(0)] * d
        e[j] = Fraction(1)
        col = _solve(basis_rows, e)
        assert col is not None
        rays.append(_primitive(_to_int_vec(col)))
        tight.append(full_mask & ~(1 << j))

    nproc = d
    for row in rest:
        s = [sum(a * x for a, x in zip(row, r)) for r in rays]
        neg = [i for i, v in enumerate(s) if v < 0]
        if neg:
            pos = [i for i, v in enumerate(s) if v > 0]
            zer = [i for i, v in enumerate(s) if v == 0]
            new_rays: list[tuple[int, ...]] = []
            new_tight: list[int] = []
            for ip, im in itertools.product(pos, neg):
                t = tight[ip] & tight[im]
                # combinatorial adjacency: no third ray is tight everywhere both are
                if any(
                    k != ip and k != im and (tight[k] & t) == t for k in range(len(rays))
                ):
                    continue
                rp, rm = rays[ip], rays[im]
                comb = tuple(s[ip] * b - s[im] * a for a, b in zip(rp, rm))
                new_rays.append(_primitive(comb))
                new_tight.append(t | (1 << nproc))
            keep = pos + zer
            rays = [rays[i] for i in keep] + new_rays
            tight = [
                tight[i] | ((1 << nproc) if s[i] == 0 else 0) for i in keep
            ] + new_tight
        else:
            tight = [
                t | ((1 << nproc) if v == 0 else 0) for t, v in zip(tight, s)
            ]
        nproc += 1
    return sorted(set(rays))


def _cone_generators(
    rows: list[tuple[int, ...]],
) -> tuple[list[tuple[int, ...]], list[RatVec]]:
    """Extreme rays and lineality basis of {x : r.x >= 0 for all r in rows}.

    A non-pointed cone is split into lineality space plus a pointed cone in a
    complement; returned rays live in the ambient space.
    """
    d = len(rows[0])
    rref, pivots = _rref([list(r) for r in rows])
    rank = len(rref)
    if rank == d:
        return _extreme_rays(rows), []
    lineality = _kernel_basis(rows)
    # complement of the kernel: span of the independent rows themselves
    comp = [vec(r) for r in (rref[i] for i in range(rank))]
    # substitute x = sum y_i comp_i; reduced rows act on y
    reduced = [
        _primitive(_to_int_vec([dot(row, c) for c in comp])) for row in rows
    ]
    reduced = [r for r in reduced if any(r)]
    if not reduced:
        return [], lineality
    rays_y = _extreme_rays(reduced)
    rays = []
    for ry in rays_y:
        amb = [
            sum((Fraction(y) * c[j] for y, c in zip(ry, comp)), Fraction(0))
            for j in range(d)
        ]
        rays.append(_primitive(_to_int_vec(amb)))
    return sorted(set(rays)), lineality


# ---------------------------------------------------------------------------
# generators <-> facets


def _facets_from_generators(
    points: Sequence[RatVec], rays: Sequence[RatVec] = ()
) -> tuple[list[Constraint], list[Constraint]]:
    """Facet inequalities and affine-hull equalities of conv(points) + cone(rays)."""
    dim = _check_dims(list(points) + list(rays))
    dual_rows = [_primitive(_to_int_vec((Fraction(1),) + vec(p))) for p in points]
    dual_rows += [_primitive(_to_int_vec((Fraction(0),) + vec(r))) for r in rays]
    ext_rays, lineality = _cone_generators(dual_rows)
    ineqs: list[Constraint] = []
    eqs: list[Constraint] = []
    for c in ext_rays:
        c0, normal = Fraction(c[0]), vec(c[1:])
        if not any(normal):
            continue  # the trivial "1 >= 0" facet of the homogenization
        ineqs.append((normal, -c0))
    for c in lineality:
        c0, normal = Fraction(c[0]), vec(c[1:])
        if not any(normal):
            continue
        eqs.append((normal, -c0))
    return _canonical_constraints(ineqs, flip=False), _canonical_constraints(eqs, flip=True)


def _generators_from_h(
    ineqs: Sequence[Constraint], eqs: Sequence[Constraint], dim: int
) -> tuple[list[RatVec], list[RatVec]]:
    """Vertices and extreme rays of {x : ineqs, eqs}. Raises Empty / Unbounded."""
    if eqs:
        point = _solve([e[0] for e in eqs], [e[1] for e in eqs])
        if point is None:
            raise Empty("inconsistent equality constraints")
        # check consistency of the solve (underdetermined systems are fine)
        for n, b in eqs:
            if dot(n, point) != b:
                raise Empty("inconsistent equality constraints")
        null = _kernel_basis([e[0] for e in eqs])
    else:
        point = tuple(Fraction(0) for _ in range(dim))
        null = [
            tuple(Fraction(1 if i == j else 0) for j in range(dim))
            for i in range(dim)
        ]
    hom_rows: list[tuple[int, ...]] = [(1,) + (0,) * len(null)]  # t >= 0
    for n, b in ineqs:
        red = [dot(n, v) for v in null]
        off = b - dot(n, point)
        if not any(red):
            if off > 0:
                raise Empty("constant constraint violated")
            continue
        hom_rows.append(_primitive(_to_int_vec([-off] + red)))
    ext_rays, lineality = _cone_generators(hom_rows)
    if lineality:
        if any(r[0] > 0 for r in ext_rays):
            raise Unbounded("feasible set contains a line")
        raise Empty("no feasible point")
    vertices: list[RatVec] = []
    rays: list[RatVec] = []
    for r in ext_rays:
        t, y = r[0], r[1:]
        direction = [
            sum((Fraction(c) * v[j] for c, v in zip(y, null)), Fraction(0))
            for j in range(dim)
        ]
        if t > 0:
            vertices.append(
                tuple(p + d / t for p, d in zip(point, direction))
            )
        elif any(direction):
            rays.append(vec(_primitive(_to_int_vec(direction))))
    if not vertices:
        raise Empty("no feasible point")
    return sorted(set(vertices)), sorted(set(rays))


def _canonical_constraints(
    constraints: Iterable[Constraint], flip: bool
) -> list[Constraint]:
    """Scale first nonzero normal entry to +-1 (+1 if sign flips are allowed), dedupe, sort."""
    out = set()
    for normal, offset in constraints:
        normal = vec(normal)
        offset = Fraction(offset)
        lead = next((x for x in normal if x != 0), None)
        if lead is None:
            continue
        scale = Fraction(1) / (lead if flip else abs(lead))
        out.add((tuple(x * scale for x in normal), offset * scale))
    return sorted(out)


# ---------------------------------------------------------------------------
# public types


@dataclass(frozen=True)
class VPolytope:
    """Polytope as its (exact, canonical) vertex list."""

    dim: int
    vertices: tuple[RatVec, ...]

    def __post_init__(self):
        for v in self.vertices:
            if len(v) != self.dim:
                raise DimensionMismatch("vertex/dim mismatch")


@dataclass(frozen=True)
class HPolytope:
    """Polyhedron as canonical inequalities (normal.x >= offset) and equalities."""

    dim: int
    inequalities: tuple[Constraint, ...]
    equalities: tuple[Constraint, ...] = ()

    def __post_init__(self):
        for n, _ in tuple(self.inequalities) + tuple(self.equalities):
            if len(n) != self.dim:
                raise DimensionMismatch("constraint/dim mismatch")

    @staticmethod
    def from_constraints(dim, inequalities, equalities=()) -> "HPolytope":
        return HPolytope(
            dim,
            tuple(_canonical_constraints([(vec(n), Fraction(b)) for n, b in inequalities], flip=False)),
            tuple(_canonical_constraints([(vec(n), Fraction(b)) for n, b in equalities], flip=True)),
        )


@dataclass(frozen=True)
class RatCone:
    """Closed cone {apex + t (p - apex) : p feasible for hpoly, t >= 0}, stored as an H-rep."""

    apex: RatVec
    hpoly: HPolytope


class ContainsResult(NamedTuple):
    inside: bool
    violation: Union[Fraction, float]


# ---------------------------------------------------------------------------
# operations


def extreme_points(points: Iterable[Sequence]) -> VPolytope:
    """Extreme points of conv(points), i.e. the minimal vertex description."""
    pts = [vec(p) for p in points]
    if not pts:
        raise Empty("no input points")
    dim = _check_dims(pts)
    uniq = sorted(set(pts))
    if len(uniq) == 1:
        return VPolytope(dim, tuple(uniq))
    ineqs, eqs = _facets_from_generators(uniq)
    verts, rays = _generators_from_h(ineqs, eqs, dim)
    assert not rays
    return VPolytope(dim, tuple(verts))


def vrep_to_hrep(p: VPolytope) -> HPolytope:
    """Facet inequalities plus affine-hull equalities of a V-polytope."""
    if not p.vertices:
        raise Empty("no vertices")
    ineqs, eqs = _facets_from_generators(p.vertices)
    return HPolytope(p.dim, tuple(ineqs), tuple(eqs))


def hrep_to_vrep(h: HPolytope) -> VPolytope:
    """All extreme points of a bounded H-polytope; Empty / Unbounded otherwise."""
    verts, rays = _generators_from_h(h.inequalities, h.equalities, h.dim)
    if rays:
        raise Unbounded("feasible set has recession rays")
    return VPolytope(h.dim, tuple(verts))


def intersect(a: HPolytope, b: HPolytope) -> HPolytope:
    """Intersection with redundant constraints removed (exact, canonical)."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"{a.dim} vs {b.dim}")
    ineqs = list(a.inequalities) + list(b.inequalities)
    eqs = list(a.equalities) + list(b.equalities)
    verts, rays = _generators_from_h(ineqs, eqs, a.dim)
    ineqs2, eqs2 = _facets_from_generators(verts, rays)
    return HPolytope(a.dim, tuple(ineqs2), tuple(eqs2))


def cone_hull(apex: Sequence, base: VPolytope) -> RatCone:
    """Cone of rays from `apex` through conv(base), as a (possibly unbounded) H-rep.

    The H-rep is the tangent cone of conv({apex} + base) at the apex, which
    requires the apex to be a vertex of that hull; an apex inside the base
    polytope is degenerate and rejected.
    """
    apex = vec(apex)
    if len(apex) != base.dim:
        raise DimensionMismatch("apex/base dimension mismatch")
    diffs = [tuple(x - y for x, y in zip(v, apex)) for v in base.vertices]
    if all(not any(d) for d in diffs):
        raise DegenerateCone("apex coincides with the base")
    hull_ineqs, hull_eqs = _facets_from_generators(list(base.vertices) + [apex])
    tight = [(n, b) for n, b in hull_ineqs if dot(n, apex) == b]
    active = [n for n, _ in tight] + [n for n, _ in hull_eqs]
    if _rank(active) < len(apex):
        raise DegenerateCone("apex lies inside the base polytope")
    return RatCone(apex, HPolytope(len(apex), tuple(tight), tuple(hull_eqs)))


def contains(h: HPolytope, x: Sequence, tol=0) -> ContainsResult:
    """Membership of a point, with the worst constraint violation.

    Exact when `x` is rational and tol == 0; float arithmetic otherwise.
    """
    if len(x) != h.dim:
        raise DimensionMismatch("point/polytope dimension mismatch")
    exact = tol == 0 and all(isinstance(v, (int, Fraction)) for v in x)
    if exact:
        worst = Fraction(0)
        for n, b in h.inequalities:
            worst = max(worst, b - dot(n, x))
        for n, b in h.equalities:
            worst = max(worst, abs(dot(n, x) - b))
        return ContainsResult(worst == 0, worst)
    worst = 0.0
    xs = [float(v) for v in x]
    for n, b in h.inequalities:
        worst = max(worst, float(b) - sum(float(c) * v for c, v in zip(n, xs)))
    for n, b in h.equalities:
        worst = max(worst, abs(sum(float(c) * v for c, v in zip(n, xs)) - float(b)))
    return ContainsResult(worst <= tol, worst)


def polytopes_equal(a, b) -> bool:
    """Set equality of two bounded polytopes given as V- or H-reps."""
    return canonical_vertices(a) == canonical_vertices(b)


def canonical_vertices(p) -> tuple[RatVec, ...]:
    if isinstance(p, VPolytope):
        return extreme_points(p.vertices).vertices
    if isinstance(p, HPolytope):
        return hrep_to_vrep(p).vertices
    if isinstance(p, RatCone):
        raise Unbounded("a cone has no finite vertex description")
    raise TypeError(f"not a polytope: {type(p)!r}")
