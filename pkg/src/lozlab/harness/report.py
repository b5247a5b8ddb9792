"""Suite reports: per-check records serialized as deterministic JSON."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp
import numpy as np


def plain(v):
    """JSON-friendly form: exact values as strings, floats rounded to 12 digits."""
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return v if abs(v) < 2 ** 53 else str(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (mp.mpf,)):
        return mp.nstr(v, 15)
    if isinstance(v, (float, np.floating)):
        return float(f"{float(v):.12g}")
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, dict):
        return {str(k): plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, np.ndarray)):
        return [plain(x) for x in v]
    return str(v)


def _untimed(v):
    # wall-clock fields are the only run-to-run variation; zero them for byte-identical output
    if isinstance(v, dict):
        return {k: (0.0 if k == "wall_time" else _untimed(x)) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_untimed(x) for x in v]
    return v


@dataclass
class Check:
    name: str
    inputs: dict
    expected: object
    observed: object
    tol: object
    passed: bool

    def as_dict(self):
        return {"name": self.name, "inputs": plain(self.inputs), "expected": plain(self.expected),
                "observed": plain(self.observed), "tol": plain(self.tol), "pass": bool(self.passed)}


@dataclass
class SuiteReport:
    """Overall pass iff every check passes; diagnostics never affect the verdict."""

    suite: str
    seed: object = None
    checks: list = field(default_factory=list)
    diagnostics: dict = field(default_factory=dict)
    wall_ms: int = 0
    _t0: float = field(default_factory=time.perf_counter, repr=False)

    def add(self, name, inputs, expected, observed, tol, passed) -> Check:
        c = Check(name, dict(inputs), expected, observed, tol, bool(passed))
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def finish(self) -> "SuiteReport":
        self.wall_ms = int(round(1000 * (time.perf_counter() - self._t0)))
        return self

    def as_dict(self, timing: bool = True) -> dict:
        d = {"suite": self.suite, "seed": self.seed,
             "checks": [c.as_dict() for c in self.checks], "pass": self.passed}
        if self.diagnostics:
            diag = self.diagnostics if timing else _untimed(self.diagnostics)
            d["diagnostics"] = plain(diag)
        d["wall_ms"] = self.wall_ms if timing else 0
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.as_dict(timing), indent=2, sort_keys=False)

    def summary(self) -> str:
        bad = self.failures()
        head = f"{self.suite}: {'PASS' if self.passed else 'FAIL'} ({len(self.checks) - len(bad)}/{len(self.checks)} checks)"
        return head + "".join(f"\n  failed: {c.name} expected={plain(c.expected)} observed={plain(c.observed)} tol={plain(c.tol)}"
                              for c in bad[:10])
