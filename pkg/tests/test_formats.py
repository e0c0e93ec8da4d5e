import json
from pathlib import Path

import jsonschema
import pytest

from poisson_hpa.cli import run
from poisson_hpa.formats import SCHEMAS, render

DOCS = Path(__file__).parent.parent / "docs" / "formats"
FIXTURES = Path(__file__).parent / "fixtures"


@pytest.mark.parametrize("name", sorted(SCHEMAS))
def test_published_schema_is_current(name):
    assert (DOCS / f"{name}.schema.json").read_text() == render(SCHEMAS[name])


@pytest.mark.parametrize("name", sorted(SCHEMAS))
def test_schemas_are_valid_draft_2020(name):
    jsonschema.Draft202012Validator.check_schema(SCHEMAS[name])


def test_no_stray_schema_files():
    assert sorted(p.name for p in DOCS.glob("*.schema.json")) == \
        sorted(f"{n}.schema.json" for n in SCHEMAS)


@pytest.mark.parametrize("fixture", ["rotation.json", "gauge_point.json"])
def test_gauge_output_is_an_hpa_document(fixture, tmp_path):
    import io
    out = io.StringIO()
    assert run(["gauge", str(FIXTURES / fixture)], stdout=out) == 0
    doc = json.loads(out.getvalue())["data"]["hpa"]
    jsonschema.validate(doc, SCHEMAS["hpa"])
    path = tmp_path / "out.json"
    path.write_text(json.dumps(doc))
    assert run(["mc-check", str(path)], stdout=io.StringIO()) == 0
