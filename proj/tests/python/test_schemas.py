"""Validate CLI inputs and reports against the shipped JSON schemas."""

import json
import os
import pathlib
import subprocess

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "schemas" / "v1"
FIXTURES = ROOT / "tests" / "cli" / "fixtures"
CLI = os.environ.get("LORHOL_CLI", str(ROOT / "build" / "tools" / "lorhol"))


def _registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


REGISTRY = _registry()


def validator(name):
    doc = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    Draft202012Validator.check_schema(doc)
    return Draft202012Validator(doc, registry=REGISTRY)


def run(*args):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, check=False)
    return proc.returncode, proc.stdout


RUNS = [
    ("classify", "subalgebra", "grading_generators.json", []),
    ("classify", "subalgebra", "type4_n3.json", []),
    ("centralizer", "subalgebra", "type4_n3.json", []),
    ("trivial-submodule", "subalgebra", "g_minus_n1.json", ["--module", "hom"]),
    ("trivial-submodule", "subalgebra", "type4_n3.json", ["--module", "torsion"]),
    ("trivial-submodule", "subalgebra", "type4_n3.json", ["--module", "vector"]),
    ("trivial-submodule", "subalgebra", "g_minus_n1.json", ["--module", "curvature"]),
    ("torsion-split", "torsion-split", "torsion_sample.json", []),
    ("curvature-space", "curvature-space", "obstruction.json", []),
    ("model-check", "model-check", "cw_model.json", []),
    ("model-check", "model-check", "broken_bianchi_model.json", []),
    ("cw-verify", "cw-verify", "cw_profile.json", []),
]


@pytest.mark.parametrize("command,input_schema,fixture,extra", RUNS)
def test_fixture_round(command, input_schema, fixture, extra):
    validator(f"{input_schema}.input").validate(json.loads((FIXTURES / fixture).read_text()))
    code, out = run(command, "--input", str(FIXTURES / fixture), *extra)
    assert code in (0, 1)
    report = json.loads(out)
    validator(f"{command}.report").validate(report)
    assert (code == 0) == report["ok"]


def test_curvature_space_with_basis():
    code, out = run("curvature-space", "--input", '{"h": {"n": 2, "fixture": "so_g_minus"}}')
    assert code == 0
    validator("curvature-space.report").validate(json.loads(out))


@pytest.mark.parametrize("args", [["--a", "1", "--c", "0"], ["--a", "1", "--c", "-1/2"], ["--a", "0"]])
def test_sl2_report(args):
    code, out = run("sl2-verify", *args)
    assert code == 0
    validator("sl2-verify.report").validate(json.loads(out))


def test_cw_default_profile():
    code, out = run("cw-verify", "--n", "3")
    assert code == 0
    validator("cw-verify.report").validate(json.loads(out))


@pytest.mark.parametrize("fixture", ["malformed.json", "unsupported_n.json"])
def test_error_report(fixture):
    code, out = run("classify", "--input", str(FIXTURES / fixture))
    assert code == 2
    validator("error").validate(json.loads(out))


def test_schema_rejects_bad_input():
    v = validator("subalgebra.input")
    assert not v.is_valid({"n": 2, "fixture": "nope"})
    assert not v.is_valid({"n": 0, "fixture": "g_minus"})
    assert not v.is_valid({"n": 2, "generators": [{"b": "1"}]})
    assert v.is_valid({"n": 2, "generators": [{"a": 1, "v": ["1/2", "0"]}]})
