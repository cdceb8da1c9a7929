"""Exact exceptional orthogonal polynomials.

Coefficients come back ascending, as ``fractions.Fraction``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import _eopkit
from ._eopkit import SpecError, run_cli

__all__ = ["SpecError", "cop", "eop", "run_cli", "verify", "suite"]


def _text(v) -> str:
    return str(Fraction(v))


def cop(family: str, n: int, alpha=0, beta=0) -> list[Fraction]:
    return [Fraction(c) for c in _eopkit.classical(family, n, _text(alpha), _text(beta))]


def eop(family: str, type: str, m: int, n: int, alpha=0, beta=0) -> list[Fraction]:
    if family == "hermite" and type is None:
        type = "III"
    return [Fraction(c) for c in _eopkit.exceptional(family, type, m, n, _text(alpha), _text(beta))]


def _json_command(args: list[str]) -> dict:
    code, out, err = run_cli(["--format", "json", *args])
    if code == 2:
        raise SpecError(err.strip().removeprefix("error: "))
    result = json.loads(out)
    result["exit_code"] = code
    return result


def verify(claim: str, **options) -> dict:
    """Runs one claim; options map to CLI flags, e.g. m=1, n=2, alpha="symbolic"."""
    args = ["verify", claim]
    for key, value in options.items():
        flag = f"-{key}" if len(key) == 1 else f"--{key.replace('_', '-')}"
        args += [flag, str(value)]
    return _json_command(args)


def suite(**options) -> dict:
    args = ["suite"]
    for key, value in options.items():
        args += [f"--{key.replace('_', '-')}", str(value)]
    return _json_command(args)
