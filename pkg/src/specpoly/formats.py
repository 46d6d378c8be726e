"""Canonical JSON and cdd-style text serialization of exact polytopes.

JSON schema: `{"dim": n, "vertices": [["p/q", ...], ...]}` for V-polytopes and
`{"dim": n, "inequalities": [{"normal": [...], "offset": "p/q"}, ...],
"equalities": [...]}` for H-polytopes, all rationals as strings. The cdd
emitters produce `.ext` / `.ine` blocks with exact rational entries
(inequality rows are `[b, a]` meaning b + a.x >= 0, equalities listed in the
`linearity` line).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

from .ratgeom import HPolytope, VPolytope, vec

Polytope = Union[VPolytope, HPolytope]


def _rat(x: Fraction) -> str:
    return str(Fraction(x))


def polytope_to_dict(p: Polytope) -> dict:
    if isinstance(p, VPolytope):
        return {"dim": p.dim, "vertices": [[_rat(x) for x in v] for v in p.vertices]}
    if isinstance(p, HPolytope):
        return {
            "dim": p.dim,
            "inequalities": [
                {"normal": [_rat(x) for x in n], "offset": _rat(b)}
                for n, b in p.inequalities
            ],
            "equalities": [
                {"normal": [_rat(x) for x in n], "offset": _rat(b)}
                for n, b in p.equalities
            ],
        }
    raise TypeError(f"not a polytope: {type(p)!r}")


def polytope_from_dict(data: dict) -> Polytope:
    dim = int(data["dim"])
    if "vertices" in data:
        return VPolytope(dim, tuple(vec(v) for v in data["vertices"]))
    return HPolytope.from_constraints(
        dim,
        [(vec(c["normal"]), Fraction(c["offset"])) for c in data.get("inequalities", [])],
        [(vec(c["normal"]), Fraction(c["offset"])) for c in data.get("equalities", [])],
    )


def polytope_to_json(p: Polytope) -> str:
    return json.dumps(polytope_to_dict(p), sort_keys=True, separators=(",", ":")) + "\n"


def polytope_from_json(text: str) -> Polytope:
    return polytope_from_dict(json.loads(text))


def to_ext(p: VPolytope) -> str:
    """cdd .ext block: one `1 x1 ... xd` row per vertex, exact rationals."""
    lines = ["V-representation", "begin", f" {len(p.vertices)} {p.dim + 1} rational"]
    for v in p.vertices:
        lines.append(" " + " ".join(["1"] + [_rat(x) for x in v]))
    lines.append("end")
    return "\n".join(lines) + "\n"


def to_ine(p: HPolytope) -> str:
    """cdd .ine block: rows [b a] meaning b + a.x >= 0 (== 0 for linearity rows)."""
    rows = list(p.equalities) + list(p.inequalities)
    lines = ["H-representation"]
    if p.equalities:
        idx = " ".join(str(i + 1) for i in range(len(p.equalities)))
        lines.append(f"linearity {len(p.equalities)} {idx}")
    lines += ["begin", f" {len(rows)} {p.dim + 1} rational"]
    for n, b in rows:
        lines.append(" " + " ".join([_rat(-b)] + [_rat(x) for x in n]))
    lines.append("end")
    return "\n".join(lines) + "\n"


def to_cdd(p: Polytope) -> str:
    return to_ext(p) if isinstance(p, VPolytope) else to_ine(p)


def from_cdd(text: str) -> Polytope:
    """Parse the `.ext`/`.ine` blocks emitted by `to_cdd`."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    kind = lines[0]
    linearity: set[int] = set()
    i = 1
    while lines[i] != "begin":
        if lines[i].startswith("linearity"):
            parts = lines[i].split()
            linearity = {int(x) - 1 for x in parts[2:]}
        i += 1
    count, width, _ = lines[i + 1].split()
    count, width = int(count), int(width)
    rows = [vec(lines[i + 2 + k].split()) for k in range(count)]
    if kind.startswith("V"):
        if any(r[0] != 1 for r in rows):
            raise ValueError("rays in .ext input are not supported")
        return VPolytope(width - 1, tuple(sorted(set(r[1:] for r in rows))))
    ineqs, eqs = [], []
    for k, r in enumerate(rows):
        constraint = (r[1:], -r[0])
        (eqs if k in linearity else ineqs).append(constraint)
    return HPolytope.from_constraints(width - 1, ineqs, eqs)
