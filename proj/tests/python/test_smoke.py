import json

import pytest

import divtop


def test_z6_is_discrete():
    t = divtop.Module.cyclic(6).topology()
    assert t.labels == ["2", "3"]
    assert t.basic_open("2") == ["2"]
    (v,) = t.check("discrete")
    assert v["holds"]


def test_z12_t1_witness():
    t = divtop.topology("Zn:12")
    assert t.basic_open("6") == ["2", "3", "6"]
    (v,) = t.check("T1")
    assert not v["holds"]
    assert v["summary"] == "T1: false; witness [2],[4]"
    assert t.closure(["2"]) == ["2", "4", "6"]
    assert t.is_open(["2", "4"]) and not t.is_open(["4"])


def test_module_algebra():
    z12 = divtop.Module.parse("Zn:12")
    assert z12.divides([2], [4]) and not z12.divides([4], [2])
    assert not z12.is_pseudo_simple()
    assert z12.associates(z12.gcd([4], [6]), [2])
    v4 = divtop.Module.from_moduli([2, 2])
    assert v4.is_pseudo_simple()
    assert v4.gcd([1, 0], [0, 1]) is None
    assert [c for c in divtop.Module.cyclic(6).sharp_elements()] == [[2], [3], [4]]


def test_json_export():
    doc = json.loads(divtop.topology("Zn:12").to_json(verdicts=True))
    assert doc["schema"] == "divtop.topology"
    assert doc["schema_version"] == divtop.TOPOLOGY_SCHEMA_VERSION
    assert len(doc["classes"]) == 4


def test_symbolic():
    c = divtop.symbolic_compactness("sym:Q,B=10")
    assert not c["compact"] and c["flagged"] and c["refuter"]
    assert divtop.symbolic_compactness("sym:E,p=2,D=8")["compact"]
    assert divtop.topology("sym:Z,N=12").truncated


def test_verify():
    assert "main-equivalence" in divtop.theorems()
    r = divtop.verify("pseudoZn", shape="cyclic", bound=100)
    assert r["instances"] == 99 and r["failed"] == 0
    r = divtop.verify("fgPS", bound=10)
    assert {c["instance"] for c in r["failures"]} == {"Zn:4", "Zn:9"}


def test_errors():
    with pytest.raises(divtop.ParseError):
        divtop.topology("Zn:x")
    with pytest.raises(divtop.UnknownTheorem):
        divtop.verify("nope")
    with pytest.raises(divtop.DivtopError):
        divtop.Module.cyclic(12).divides([2, 1], [4])
