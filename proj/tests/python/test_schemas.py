import json
import pathlib

import pytest

import divtop

jsonschema = pytest.importorskip("jsonschema")
DOCS = pathlib.Path(__file__).resolve().parents[2] / "docs"


@pytest.mark.parametrize("spec", ["Zn:12", "Zn:7", "ab:2^2x3", "triv:n=4,m=2", "sym:Q,B=4", "sym:Z,N=20"])
def test_topology_export_matches_schema(spec):
    schema = json.loads((DOCS / "topology.schema.json").read_text())
    jsonschema.validate(json.loads(divtop.topology(spec).to_json(verdicts=True)), schema)


def test_sweep_report_matches_schema():
    schema = json.loads((DOCS / "sweep.schema.json").read_text())
    doc = json.loads(divtop._core._verify_json("fgPS", None, 20, 1, 16))
    jsonschema.validate(doc, schema)
    assert doc["reports"][0]["failed"] == 2
