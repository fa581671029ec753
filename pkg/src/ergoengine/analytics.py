"""Closed-form energetics of the coupled-qubit engine.

These formulas are kept free of the cycle drivers on purpose: tests compare
the two routes against each other. Populations ``p`` are thermal and ordered
by ascending energy (-6J, 2J-2B, 2J, 2J+2B); ``p_pm`` are the
post-measurement populations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, expm1, exp
from typing import NamedTuple

import numpy as np

from .errors import NotR1, WrongOrdering
from .measurement import zz_kappa

_BOUNDARY_TOL = 1e-12


def zz_chi(B2: float, J: float, beta: float) -> float:
    """Threshold (e^{2 beta B2} - 1) / (e^{8 beta J} - 1) for the R1 ordering."""
    x, y = 2 * beta * B2, 8 * beta * J
    if y < 700:
        return expm1(x) / expm1(y)
    return exp(x - y) * (-expm1(-x)) / (-expm1(-y))


@dataclass(frozen=True)
class R1Condition:
    chi: float
    kappa: float

    @property
    def holds(self) -> bool:
        return self.kappa > self.chi


def r1_condition(B2: float, J: float, beta: float, c0: float) -> R1Condition:
    return R1Condition(chi=zz_chi(B2, J, beta), kappa=zz_kappa(c0))


def eta_r1(B2: float, J: float, beta: float, c0: float) -> float:
    """Efficiency of the z-z engine in the R1 ordering.

    Independent of B1. Zero on the boundary kappa = chi.

    Raises:
        NotR1: if kappa < chi.
    """
    cond = r1_condition(B2, J, beta, c0)
    if cond.kappa < cond.chi - _BOUNDARY_TOL * max(1.0, cond.chi):
        raise NotR1(f"R1 needs kappa > chi, got kappa={cond.kappa:.6g}, chi={cond.chi:.6g}")
    if cond.kappa == 0.0:
        raise NotR1("c0 = 0 is a trivial measurement")
    return B2 / (4 * J) * (1 - cond.chi / cond.kappa)


def qm_zz(p, p_pm, J: float) -> float:
    """Measurement heat for z-z: 8J (p3' - p3)."""
    return 8 * J * (p_pm[2] - p[2])


def w1_zz(p, B1: float, B2: float) -> float:
    return -2 * (B1 - B2) * (p[1] - p[3])


def werg_r1(p, p_pm, B1: float) -> float:
    return -2 * B1 * (p_pm[2] - p[1])


def w2_r1(p, p_pm, B1: float, B2: float) -> float:
    return 2 * (B1 - B2) * (p_pm[2] - p[3])


def qres_r1(p, p_pm, B2: float, J: float) -> float:
    return 2 * B2 * (p_pm[2] - p[1]) - 8 * J * (p_pm[2] - p[2])


def wt5_r1(p, p_pm, B2: float) -> float:
    """Five-stroke work in the R1 ordering, 2 B2 (p3' - p2)."""
    if p_pm[2] < p[1] - _BOUNDARY_TOL:
        raise WrongOrdering("R1 requires p3' >= p2")
    return 2 * B2 * (p_pm[2] - p[1])


def wt5_r2(p, p_pm, B2: float, J: float) -> float:
    """Five-stroke work in the R2 ordering, 2 (4J - B2)(p2 - p1')."""
    if p[1] < p_pm[0] - _BOUNDARY_TOL:
        raise WrongOrdering("R2 requires p2 >= p1'")
    return 2 * (4 * J - B2) * (p[1] - p_pm[0])


def eta_r2(p, p_pm, B2: float, J: float) -> float:
    return wt5_r2(p, p_pm, B2, J) / qm_zz(p, p_pm, J)


class XXProjective(NamedTuple):
    q_m: float
    w_erg: float
    w_total5: float
    w_total4: float
    w_total3: float


def xx_projective_energetics(p, B1: float, B2: float, J: float) -> XXProjective:
    p1, p2, p3, p4 = p
    w4 = 2 * (B1 - B2) * (p2 - p4)
    w3 = B2 * (p1 - p3) / 2
    return XXProjective(
        q_m=2 * B1 * (p2 - p4) + 2 * J * (2 * p1 - p2 - p4),
        w_erg=-B1 * (p1 - p3) / 2,
        w_total5=w4 + w3,
        w_total4=w4,
        w_total3=w3,
    )


class XZProjective(NamedTuple):
    q_m: float
    w_total5: float
    w_total4: float
    w_total3: float


def xz_projective_energetics(p, B1: float, B2: float, J: float) -> XZProjective:
    p1, p2, p3, p4 = p
    w4 = (B1 - B2) * (p2 - p4)
    w3 = 0.5 * (4 * J - B2) * (p2 - p4)
    return XZProjective(
        q_m=B1 * (p2 - p4) + 2 * J * (3 * p1 - p2 - p3 - p4),
        w_total5=w4 + w3,
        w_total4=w4,
        w_total3=w3,
    )


def projective_p2p4_gap(p, theta_a: float, theta_b: float) -> float:
    """p2' - p4' after projective measurements at polar angles ``theta_a``, ``theta_b``."""
    return 0.5 * (cos(theta_a) ** 2 + cos(theta_b) ** 2) * (p[1] - p[3])


def eta_r1_grid(B2: float, J: float, beta: float, c0) -> np.ndarray:
    """Vectorized R1 efficiency; NaN where R1 fails."""
    c0 = np.asarray(c0, dtype=float)
    kappa = 4 * c0**2 * (1 - 2 * c0**2)
    chi = zz_chi(B2, J, beta)
    with np.errstate(divide="ignore", invalid="ignore"):
        eta = B2 / (4 * J) * (1 - chi / kappa)
    return np.where(kappa > chi, eta, np.nan)
