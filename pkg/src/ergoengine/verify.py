"""Seeded randomized cross-checks between closed forms and brute force.

Each suite draws ``n`` instances from its own child generator of the seed, so
adding a suite never changes what another suite sees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .analytics import projective_p2p4_gap
from .cycle import run_five_stroke, verify_work_identity
from .ergotropy import brute_force_ergotropy, ergotropy_extract
from .measurement import C0_MAX, MeasurementSpec, channel_post_probs, xx_post_probs, zz_post_probs
from .model import analytic_spectrum
from .sweep import build_inputs, random_point

# thresholds per suite, overridable as a group with ``tol``
DEFAULT_TOLS = {
    "channel_zz": 1e-12,
    "channel_xx": 1e-12,
    "ergotropy": 0.0,
    "work_identity": 1e-9,
    "signs": 1e-10,
    "projective_gap": 1e-12,
}


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    first_failure: dict | None = None
    worst: float = 0.0


@dataclass
class Report:
    seed: int
    n: int
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.failed == 0 for s in self.suites)

    def render(self) -> str:
        lines = [f"verify seed={self.seed} n={self.n}"]
        for s in self.suites:
            status = "PASS" if s.failed == 0 else "FAIL"
            lines.append(f"{status} {s.name}: {s.passed}/{s.passed + s.failed} (worst {s.worst:.3e})")
            if s.first_failure is not None:
                detail = ", ".join(f"{k}={_fmt(v)}" for k, v in s.first_failure.items())
                lines.append(f"  first failure: {detail}")
        lines.append("OK" if self.ok else "FAILED")
        return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, np.ndarray):
        return "[" + " ".join(format(float(x), ".17g") for x in v) + "]"
    return str(v)


def _random_p(rng) -> np.ndarray:
    return rng.dirichlet(np.ones(4))


def _case_channel_zz(rng, tol):
    p, c0 = _random_p(rng), float(rng.uniform(0, C0_MAX))
    err = float(np.max(np.abs(zz_post_probs(p, c0) - channel_post_probs(p, MeasurementSpec.preset("zz", c0)))))
    return err, err <= tol, {"p": p, "c0": c0}


def _case_channel_xx(rng, tol):
    p, c0 = _random_p(rng), float(rng.uniform(0, C0_MAX))
    err = float(np.max(np.abs(xx_post_probs(p, c0) - channel_post_probs(p, MeasurementSpec.preset("xx", c0)))))
    return err, err <= tol, {"p": p, "c0": c0}


def _case_ergotropy(rng, tol):
    J = float(rng.uniform(0.25, 3.0))
    B = float(rng.uniform(0.01, 3.99)) * J
    spec = analytic_spectrum(B, J)
    p = _random_p(rng)
    w, _, _ = ergotropy_extract(p, spec)
    brute = brute_force_ergotropy(p, spec.energies)
    err = abs(-w - brute)
    return err, err <= tol, {"p": p, "B": B, "J": J}


def _case_identity(rng, tol):
    point = random_point(rng)
    params, spec = build_inputs(point)
    res = verify_work_identity(params, spec).residual
    return res, res <= tol, point


def _case_signs(rng, tol):
    point = random_point(rng)
    params, spec = build_inputs(point)
    L = run_five_stroke(params, spec)
    bad = max(
        L.conservation_residual,
        max(L.w_erg, 0.0),
        max(-L.q_m, 0.0),
        max(L.q_res, 0.0) if L.is_engine else 0.0,
    )
    ok = bad <= tol and (not L.is_engine or (L.q_m > 0 and L.q_res < tol))
    return bad, ok, point


def _case_projective_gap(rng, tol):
    p = _random_p(rng)
    ta, tb = (float(x) for x in rng.uniform(0, math.pi, 2))
    fa, fb = (float(x) for x in rng.uniform(0, 2 * math.pi, 2))
    out = channel_post_probs(p, MeasurementSpec(0.5, (ta, fa), (tb, fb)))
    err = abs((out[1] - out[3]) - projective_p2p4_gap(p, ta, tb))
    return err, err <= tol, {"p": p, "thetaA": ta, "phiA": fa, "thetaB": tb, "phiB": fb}


SUITES: dict[str, Callable] = {
    "channel_zz": _case_channel_zz,
    "channel_xx": _case_channel_xx,
    "ergotropy": _case_ergotropy,
    "work_identity": _case_identity,
    "signs": _case_signs,
    "projective_gap": _case_projective_gap,
}


def run_verification(seed: int, n: int, tol: float | None = None) -> Report:
    """Run every suite ``n`` times. ``tol`` replaces all per-suite thresholds."""
    if n < 1:
        raise ValueError("n must be at least 1")
    report = Report(seed=seed, n=n)
    children = np.random.SeedSequence(seed).spawn(len(SUITES))
    for (name, case), child in zip(SUITES.items(), children):
        rng = np.random.default_rng(child)
        threshold = DEFAULT_TOLS[name] if tol is None else tol
        result = SuiteResult(name)
        for _ in range(n):
            err, ok, instance = case(rng, threshold)
            result.worst = max(result.worst, err)
            if ok:
                result.passed += 1
            else:
                result.failed += 1
                if result.first_failure is None:
                    result.first_failure = dict(instance, error=err)
        report.suites.append(result)
    return report
