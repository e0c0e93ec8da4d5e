import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from poisson_hpa.cli import COMMANDS, run
from poisson_hpa.formats import SCHEMAS

FIXTURES = Path(__file__).parent / "fixtures"
MANIFEST = json.loads((FIXTURES / "manifest.json").read_text())


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("command, fixture, expected", MANIFEST,
                         ids=[f"{c}-{f}" for c, f, _ in MANIFEST])
def test_manifest_exit_codes(command, fixture, expected):
    code, out, err = call(command, str(FIXTURES / fixture))
    assert code == expected, out + err
    if expected == 2:
        assert err.startswith("error: ") and not out
    else:
        assert json.loads(out)["summary"] == ("pass" if expected == 0 else "fail")


@pytest.mark.parametrize("command, fixture", sorted({(c, f) for c, f, e in MANIFEST if e != 2}))
def test_fixtures_match_their_schema(command, fixture):
    kind = COMMANDS[command][0]
    jsonschema.validate(json.loads((FIXTURES / fixture).read_text()), SCHEMAS[kind])


@pytest.mark.parametrize("command, fixture", [("mc-check", "rotation.json"),
                                              ("star", "star_plane.json"),
                                              ("haa-check", "quaternions.json")])
def test_output_is_deterministic(command, fixture):
    first = call(command, str(FIXTURES / fixture))
    assert first == call(command, str(FIXTURES / fixture))


def test_undeclared_variable_has_line_and_column():
    code, _, err = call("mc-check", str(FIXTURES / "undeclared_variable.json"))
    assert code == 2
    assert "undeclared_variable.json:5:40: undeclared variable 'z'" in err


def test_bad_json_has_line_and_column():
    code, _, err = call("mc-check", str(FIXTURES / "bad_json.json"))
    assert code == 2 and "bad_json.json:3:21:" in err


def test_unknown_field_is_named():
    code, _, err = call("mc-check", str(FIXTURES / "unknown_field.json"))
    assert code == 2 and "'sigma3' was unexpected" in err


def test_jacobi_violation_names_triple():
    code, _, err = call("mc-check", str(FIXTURES / "jacobi_violation.json"))
    assert code == 2 and "Jacobi identity fails on (e1, e2, e3)" in err


def test_missing_file():
    code, _, err = call("mc-check", str(FIXTURES / "nope.json"))
    assert code == 2 and "cannot read" in err


def test_text_format():
    code, out, _ = call("mc-check", str(FIXTURES / "broken_mc1.json"), "--format", "text")
    assert code == 1
    assert "[fail] mc1" in out
    assert "(e1): -1 dx^dy" in out


def test_unknown_subcommand():
    assert call("frobnicate", "x.json")[0] == 2
    assert call()[0] == 2


def test_gauge_point_sign():
    code, out, _ = call("gauge", str(FIXTURES / "gauge_point.json"))
    assert code == 0
    assert json.loads(out)["data"]["hpa"]["sigma2"] == [{"pair": [1, 2], "poly": "-1"}]


def test_translation_bundle_text():
    code, out, _ = call("bundle-assemble", str(FIXTURES / "translation.json"))
    assert code == 0
    assert json.loads(out)["data"]["bivector"] == "1 dx^dy - 1 dx^dy1 - 1 dy^dy2"


def test_star_plane_products():
    code, out, _ = call("star", str(FIXTURES / "star_plane.json"))
    assert code == 0
    assert json.loads(out)["data"]["products"]["x * y"] == "x y + 1/2 h"


def test_solve_weights_on_constant_probe(tmp_path):
    doc = {"probes": [{"variables": ["x", "y"], "pi": [{"indices": [1, 2], "poly": "1"}]}],
           "max_degree": 2}
    path = tmp_path / "probes.json"
    path.write_text(json.dumps(doc))
    code, out, _ = call("solve-weights", str(path))
    assert code == 1
    assert "undetermined" in json.loads(out)["checks"][0]["detail"]


def test_stdin_and_entry_point():
    doc = (FIXTURES / "translation.json").read_text()
    r = subprocess.run([sys.executable, "-m", "poisson_hpa.cli", "mc-check", "-"],
                       input=doc, capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["summary"] == "pass"
