"""Command-line front end.

All configuration comes from flags; identical commands with identical seeds
produce byte-identical outputs. Exit codes: 0 success, 1 usage or parse
error, 2 scenario outside the dispatch table / reference catalog.
"""

from __future__ import annotations

import dataclasses
import json
import sys
from fractions import Fraction

import click
import numpy as np

from . import formats
from .bounds import (
    NotInCatalog,
    bounds_report,
    outer_cone,
    p2_polytope,
    reference_polytope,
)
from .excitations import excitation_layers
from .oracle import (
    containment_stats,
    p2_subspace_mask,
    sample_spectra,
    violations,
)
from .ratgeom import HPolytope, VPolytope, vrep_to_hrep, vec
from .scenarios import (
    ScenarioParseError,
    UnsupportedScenario,
    highest_weight,
    is_minuscule,
    lambda_partition,
    parse_scenario,
    support,
)


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def _rats(xs) -> list[str]:
    return [str(Fraction(x)) for x in xs]


def _write(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _emit_polytope(p, out, fmt):
    _write(formats.to_cdd(p) if fmt == "cdd" else formats.polytope_to_json(p), out)


SCENARIO = click.argument("scenario")
OUT = click.option("-o", "--output", "out", default=None, help="output path (stdout if omitted)")
FMT = click.option("--format", "fmt", type=click.Choice(["json", "cdd"]), default="json")


@click.group()
def cli():
    """Exact polytope bounds on one-body quantum-marginal spectra."""


@cli.command()
@SCENARIO
@OUT
def describe(scenario, out):
    """Dimension, rank, ground weight, excitation profile of a scenario."""
    s = parse_scenario(scenario)
    layers = excitation_layers(s)
    _write(
        _dump(
            {
                "scenario": str(s),
                "dim": s.dim,
                "rank": s.rank,
                "highest_weight": _rats(highest_weight(s)),
                "n_lowering_roots": len(lambda_partition(s).delta_minus),
                "layer_sizes": list(layers.sizes),
                "minuscule": is_minuscule(s),
            }
        ),
        out,
    )


@cli.command()
@SCENARIO
@OUT
def layers(scenario, out):
    """Excitation layer sizes and weights."""
    s = parse_scenario(scenario)
    lay = excitation_layers(s)
    _write(
        _dump(
            {
                "scenario": str(s),
                "sizes": list(lay.sizes),
                "layers": [[_rats(w) for w in layer] for layer in lay.layers],
            }
        ),
        out,
    )


@cli.command()
@SCENARIO
@OUT
@FMT
def p2(scenario, out, fmt):
    """Inner bound from doubly excited states (exact vertices)."""
    _emit_polytope(p2_polytope(parse_scenario(scenario)), out, fmt)


@cli.command()
@SCENARIO
@OUT
@FMT
def outer(scenario, out, fmt):
    """Outer weight-cone bound cut by the chamber (exact inequalities)."""
    _emit_polytope(outer_cone(parse_scenario(scenario)), out, fmt)


@cli.command()
@SCENARIO
@OUT
@FMT
def reference(scenario, out, fmt):
    """Catalog polytope for scenarios with a known closed form."""
    _emit_polytope(reference_polytope(parse_scenario(scenario)), out, fmt)


@cli.command()
@SCENARIO
@OUT
def report(scenario, out):
    """Inner and outer bounds plus comparison flags, as one JSON document."""
    rep = bounds_report(parse_scenario(scenario))
    data = {
        "scenario": rep.scenario,
        "p2": formats.polytope_to_dict(rep.p2),
        "outer": formats.polytope_to_dict(rep.outer),
        "reference": formats.polytope_to_dict(rep.reference) if rep.reference else None,
        "minuscule": rep.minuscule,
        "spherical": rep.spherical,
        "p2_equals_reference": rep.p2_equals_reference,
    }
    _write(_dump(data), out)


@cli.command()
@SCENARIO
@OUT
@click.option("-n", "count", default=100, show_default=True, help="number of states")
@click.option("--seed", default=0, show_default=True)
@click.option("--mask", type=click.Choice(["full", "p2-subspace"]), default="full")
def sample(scenario, out, count, seed, mask):
    """Chamber spectra of seeded random states, one JSON row per line."""
    if count < 1:
        raise click.UsageError("-n must be at least 1")
    s = parse_scenario(scenario)
    m = p2_subspace_mask(s) if mask == "p2-subspace" else None
    rows = sample_spectra(s, count, seed, m)
    _write("".join(_dump([float(x) for x in row]) for row in rows), out)


@cli.command()
@SCENARIO
@OUT
@click.option(
    "--against",
    type=click.Choice(["p2", "outer", "reference"]),
    default="reference",
    show_default=True,
)
@click.option("-n", "count", default=10_000, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--tol", default=1e-8, show_default=True)
@click.option("--mask", type=click.Choice(["full", "p2-subspace"]), default="full")
def validate(scenario, out, against, count, seed, tol, mask):
    """Monte Carlo containment of sampled spectra in a bound."""
    if count < 1:
        raise click.UsageError("-n must be at least 1")
    s = parse_scenario(scenario)
    if against == "p2":
        target = vrep_to_hrep(p2_polytope(s))
    elif against == "outer":
        target = outer_cone(s)
    else:
        ref = reference_polytope(s)
        target = ref if isinstance(ref, HPolytope) else vrep_to_hrep(ref)
    m = p2_subspace_mask(s) if mask == "p2-subspace" else None
    stats = containment_stats(s, target, n=count, tol=tol, seed=seed, mask=m)
    data = dataclasses.asdict(stats)
    data["against"] = against
    _write(_dump(data), out)


@cli.command()
@click.argument("spectra_file")
@click.argument("polytope_file")
@OUT
@click.option("--tol", default=1e-8, show_default=True)
def check(spectra_file, polytope_file, out, tol):
    """Membership of each spectrum row (JSONL) in a polytope file (JSON or cdd)."""
    with open(polytope_file) as fh:
        text = fh.read()
    poly = (
        formats.polytope_from_json(text)
        if text.lstrip().startswith("{")
        else formats.from_cdd(text)
    )
    h = poly if isinstance(poly, HPolytope) else vrep_to_hrep(poly)
    rows = []
    with open(spectra_file) as fh:
        for line in fh:
            if line.strip():
                rows.append([float(Fraction(str(x))) for x in json.loads(line)])
    if not rows:
        raise click.UsageError(f"no spectra rows in {spectra_file}")
    viol = violations(h, np.asarray(rows))
    data = {
        "n": len(rows),
        "tol": tol,
        "inside": int((viol <= tol).sum()),
        "max_violation": float(viol.max()),
        "rows": [
            {"inside": bool(v <= tol), "violation": float(v)} for v in viol
        ],
    }
    _write(_dump(data), out)


def main(argv=None) -> int:
    """Entry point with the documented exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except (ScenarioParseError, click.UsageError, click.BadParameter) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except (UnsupportedScenario, NotInCatalog) as exc:
        kind = "not-in-catalog" if isinstance(exc, NotInCatalog) else "unsupported"
        click.echo(_dump({"error": kind, "reason": str(exc)}), nl=False)
        return 2
    except click.exceptions.Exit as exc:  # --help and friends
        return int(exc.exit_code)
    except click.ClickException as exc:
        exc.show()
        return 1


if __name__ == "__main__":
    sys.exit(main())
