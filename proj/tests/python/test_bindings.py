"""Smoke tests for the Python bindings."""

import json
from fractions import Fraction

import pytest

lorhol = pytest.importorskip("lorhol")


def test_commands_listed():
    assert set(lorhol.commands()) == {
        "classify",
        "centralizer",
        "trivial-submodule",
        "torsion-split",
        "curvature-space",
        "model-check",
        "sl2-verify",
        "cw-verify",
    }


def test_classify_grading_generators():
    h = {"n": 2, "generators": [{"a": "1"}, {"v": ["1", "0"]}, {"v": ["0", "1"]}]}
    r = lorhol.classify(h)
    assert r.ok
    assert r.result["kind"] == "type1"
    assert lorhol.classify(h, expect_kind="type2").exit_code == 1


def test_trivial_hom_submodule_of_g_minus():
    r = lorhol.trivial_submodule("g_minus", "hom", n=1)
    assert r.ok
    assert r.result["dim"] == 3


def test_fixture_types():
    kinds = {f: lorhol.classify(f, n=3).result["kind"] for f in ("grading_g_minus", "so_g_minus", "graph_g_minus", "type4")}
    assert kinds == {"grading_g_minus": "type1", "so_g_minus": "type2", "graph_g_minus": "type3", "type4": "type4"}


def test_sl2_values():
    r = lorhol.sl2_verify(1, 0)
    assert r.ok
    assert r.result["ricci"] == [["0", "0", "-2"], ["0", "-2", "0"], ["-2", "0", "1"]]
    assert r.result["einstein"] is False
    e = lorhol.sl2_verify(1, Fraction(-1, 2))
    assert e.ok and e.result["einstein"] is True


def test_cahen_wallach():
    r = lorhol.cw_verify([[1, 0], [0, -1]])
    assert r.ok
    assert (r.result["pp"], r.result["plane"], r.result["symmetric"]) == (True, True, True)
    assert r.result["holonomy_dim"] == 2


def test_obstruction_infeasible():
    spec = {
        "h": {"n": 1, "generators": [{"v": ["1"]}]},
        "torsion": [
            {"pair": [0, 1], "value": ["2", "0", "0"]},
            {"pair": [0, 2], "value": ["-1", "-2", "0"]},
            {"pair": [1, 2], "value": ["0", "-1", "2"]},
        ],
        "require_trivial": True,
        "pins": [{"pair": [1, 2], "value": {"v": ["1"]}}],
    }
    r = lorhol.curvature_space(spec, expect_feasible=False)
    assert r.ok
    assert r.result["feasible"] is False


def test_errors():
    assert lorhol.classify({"n": 42, "fixture": "g_minus"}).exit_code == 2
    assert lorhol.run("classify").report["schema"] == "lorhol.error.v1"
    with pytest.raises(ValueError):
        lorhol.run("classify", "{not json")
    with pytest.raises(ValueError):
        lorhol.sl2_verify("1/0", 0)


def test_matches_cli_bytes():
    a = lorhol.run("sl2-verify", a="1", c="0").report
    b = lorhol.run("sl2-verify", a=1, c=0).report
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
