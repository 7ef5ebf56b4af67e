"""Python bindings for the lorhol exact computations.

Every function returns a ``Result`` holding the exit code (0 all checks
pass, 1 a mathematical check failed, 2 input error) and the parsed report,
identical to what the ``lorhol`` command line tool prints.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from ._lorhol import commands
from ._lorhol import run as _run

__all__ = [
    "Result",
    "commands",
    "run",
    "classify",
    "centralizer",
    "trivial_submodule",
    "torsion_split",
    "curvature_space",
    "model_check",
    "sl2_verify",
    "cw_verify",
]


@dataclass(frozen=True)
class Result:
    exit_code: int
    report: dict

    @property
    def ok(self):
        return self.exit_code == 0

    @property
    def result(self):
        return self.report.get("result", {})

    def check(self, name):
        for c in self.report.get("checks", []):
            if c["name"] == name:
                return c
        raise KeyError(name)


def _rational(x):
    if x is None:
        return None
    return str(Fraction(x)) if not isinstance(x, str) else x


def run(command, input=None, **options):
    """Run ``command`` on ``input`` (a dict, a JSON string or None)."""
    if input is not None and not isinstance(input, str):
        input = json.dumps(input)
    for key in ("a", "c"):
        if key in options:
            options[key] = _rational(options[key])
    code, text = _run(command, input, **options)
    return Result(code, json.loads(text))


def _subalgebra(h, n):
    if isinstance(h, str):
        h = {"fixture": h}
    if n is not None:
        h = {**h, "n": n}
    return h


def classify(h, n=None, expect_kind=None):
    return run("classify", _subalgebra(h, n), expect_kind=expect_kind)


def centralizer(h, n=None):
    return run("centralizer", _subalgebra(h, n))


def trivial_submodule(h, module="hom", n=None, expect_dim=None):
    return run("trivial-submodule", _subalgebra(h, n), module=module, expect_dim=expect_dim)


def torsion_split(torsion, n):
    return run("torsion-split", {"n": n, "torsion": torsion})


def curvature_space(spec, expect_feasible=None):
    return run("curvature-space", spec, expect_feasible=expect_feasible)


def model_check(model):
    return run("model-check", model)


def sl2_verify(a=1, c=0):
    return run("sl2-verify", a=a, c=c)


def cw_verify(Q=None, n=None):
    return run("cw-verify", None if Q is None else {"Q": [[str(Fraction(x)) for x in row] for row in Q]}, n=n)
