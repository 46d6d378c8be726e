import json

import pytest

from specpoly.cli import main
from specpoly.formats import polytope_from_json
from specpoly.ratgeom import polytopes_equal, vec
from specpoly.bounds import p2_polytope, reference_polytope
from specpoly.scenarios import parse_scenario


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_describe(capsys):
    code, out, _ = run(capsys, "describe", "fermions:3@6")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 20
    assert data["layer_sizes"] == [1, 9, 9, 1]
    assert data["minuscule"] is True
    assert data["n_lowering_roots"] == 9


def test_describe_bosons(capsys):
    code, out, _ = run(capsys, "describe", "bosons:2@2")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 3 and data["minuscule"] is False


def test_describe_fock(capsys):
    code, out, _ = run(capsys, "describe", "fock-even:5")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 16 and data["layer_sizes"] == [1, 10, 5]


def test_layers_command(capsys):
    code, out, _ = run(capsys, "layers", "fock-even:4")
    data = json.loads(out)
    assert code == 0 and data["sizes"] == [1, 6, 1]
    assert data["layers"][2] == [["-1/2", "-1/2", "-1/2", "-1/2"]]


def test_p2_to_file(tmp_path, capsys):
    out = tmp_path / "p2.json"
    code, _, _ = run(capsys, "p2", "fermions:3@6", "-o", str(out))
    assert code == 0
    poly = polytope_from_json(out.read_text())
    assert len(poly.vertices) == 4


def test_p2_unsupported_exit_2(capsys):
    code, out, _ = run(capsys, "p2", "fermions:3@8")
    assert code == 2
    data = json.loads(out)
    assert data["error"] == "unsupported" and "fermions:3@8" in data["reason"]


def test_reference_not_in_catalog_exit_2(capsys):
    code, out, _ = run(capsys, "reference", "fock-even:7")
    assert code == 2
    assert json.loads(out)["error"] == "not-in-catalog"


def test_parse_error_exit_1(capsys):
    code, _, err = run(capsys, "describe", "quarks:3@6")
    assert code == 1 and "cannot parse" in err


def test_usage_error_exit_1(capsys):
    code, _, err = run(capsys, "sample", "fermions:3@6", "-n", "0")
    assert code == 1


def test_report_flags(capsys):
    code, out, _ = run(capsys, "report", "dist:2x2x3")
    data = json.loads(out)
    assert code == 0
    assert data["minuscule"] is True
    assert data["p2_equals_reference"] is False
    assert len(data["p2"]["vertices"]) == 7
    assert data["reference"]["vertices"]


def test_cdd_format(capsys):
    code, out, _ = run(capsys, "p2", "bosons:2@2", "--format", "cdd")
    assert code == 0 and out.startswith("V-representation")
    code, out, _ = run(capsys, "outer", "dist:2x2", "--format", "cdd")
    assert code == 0 and out.startswith("H-representation")


def test_sample_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    code1, _, _ = run(capsys, "sample", "fock-odd:4", "-n", "3", "--seed", "1", "-o", str(a))
    code2, _, _ = run(capsys, "sample", "fock-odd:4", "-n", "3", "--seed", "1", "-o", str(b))
    assert code1 == code2 == 0
    assert a.read_bytes() == b.read_bytes()
    rows = [json.loads(line) for line in a.read_text().splitlines()]
    assert len(rows) == 3
    from specpoly.ratgeom import contains
    from specpoly.scenarios import scenario_chamber

    ch = scenario_chamber(parse_scenario("fock-odd:4"))
    for row in rows:
        assert contains(ch, row, tol=1e-12).inside


def test_sample_different_seed_differs(tmp_path, capsys):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    run(capsys, "sample", "fermions:2@4", "-n", "2", "--seed", "1", "-o", str(a))
    run(capsys, "sample", "fermions:2@4", "-n", "2", "--seed", "2", "-o", str(b))
    assert a.read_text() != b.read_text()


def test_validate(capsys):
    code, out, _ = run(
        capsys, "validate", "fermions:3@6", "--against", "reference",
        "-n", "500", "--seed", "7",
    )
    data = json.loads(out)
    assert code == 0
    assert data["against"] == "reference"
    assert data["inside_fraction"] == 1.0


def test_validate_p2_strict_for_223(capsys):
    code, out, _ = run(
        capsys, "validate", "dist:2x2x3", "--against", "p2", "-n", "2000", "--seed", "3",
    )
    data = json.loads(out)
    assert code == 0 and data["inside_fraction"] < 1.0


def test_check_command(tmp_path, capsys):
    poly = tmp_path / "poly.json"
    spectra = tmp_path / "spectra.jsonl"
    run(capsys, "reference", "fermions:3@6", "-o", str(poly))
    run(capsys, "sample", "fermions:3@6", "-n", "5", "--seed", "11", "-o", str(spectra))
    with open(spectra, "a") as fh:
        fh.write(json.dumps([1.0, 1.0, 1.0, 1.0, 1.0, 1.0]) + "\n")  # far outside
    code, out, _ = run(capsys, "check", str(spectra), str(poly))
    data = json.loads(out)
    assert code == 0
    assert data["n"] == 6 and data["inside"] == 5
    assert data["rows"][-1]["inside"] is False


def test_check_cdd_polytope(tmp_path, capsys):
    poly = tmp_path / "poly.ine"
    spectra = tmp_path / "s.jsonl"
    run(capsys, "outer", "dist:2x2", "--format", "cdd", "-o", str(poly))
    spectra.write_text(json.dumps(["1/2", "1/2", "1/2", "1/2"]) + "\n")
    code, out, _ = run(capsys, "check", str(spectra), str(poly))
    assert code == 0 and json.loads(out)["inside"] == 1


def test_byte_identical_polytope_output(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "report", "fermions:2@6", "-o", str(a))
    run(capsys, "report", "fermions:2@6", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_help_exit_zero(capsys):
    assert main(["--help"]) == 0
