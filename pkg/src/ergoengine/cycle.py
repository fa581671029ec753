"""Five-, four- and three-stroke measurement-fueled cycles.

Five-stroke cycle, starting from the thermal state at field B2:

1. adiabatic ramp B2 -> B1 (populations kept)            -> ``w1``
2. non-selective measurement at B1                       -> ``q_m``
3. ergotropy extraction by a cyclic unitary at B1        -> ``w_erg``
4. adiabatic ramp B1 -> B2                               -> ``w2``
5. thermalization with the reservoir                     -> ``q_res``

The four-stroke cycle skips step 3. The three-stroke cycle has no ramps: it
measures, extracts and thermalizes at a single field (B2 by default).

Every quantity is the change in mean energy of the working medium during the
stroke, so ``w_total = -(w1 + w_erg + w2) = q_m + q_res`` is the work output.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .config import get_tolerances
from .core import Spectrum, boltzmann, energy_basis_coherence
from .ergotropy import PASSIVE, OrderingClass, ergotropy_extract
from .measurement import MeasurementSpec, channel_post_probs, post_probs
from .model import EngineParams, analytic_spectrum

log = logging.getLogger(__name__)

FIVE = "FIVE"
FOUR = "FOUR"
THREE = "THREE"


@dataclass(frozen=True, eq=False)
class StrokeLedger:
    """Energetics of one cycle plus the populations that produced them."""

    cycle_kind: str
    w1: float
    q_m: float
    w_erg: float
    w2: float
    q_res: float
    w_total: float
    eta: float
    ordering: OrderingClass
    p: np.ndarray = field(repr=False)
    p_pm: np.ndarray = field(repr=False)
    p_final: np.ndarray = field(repr=False)
    energies_meas: np.ndarray = field(repr=False)
    energies_res: np.ndarray = field(repr=False)
    # max |off-diagonal| of the post-measurement state in the energy basis;
    # ergotropy here only sees populations, so nonzero values are worth knowing
    coherence: float = 0.0

    @property
    def is_engine(self) -> bool:
        return self.w_total > get_tolerances().engine

    @property
    def conservation_residual(self) -> float:
        return max(
            abs(self.w_total - (self.q_m + self.q_res)),
            abs(self.w_total + self.w1 + self.w2 + self.w_erg),
        )

    def as_dict(self) -> dict:
        return {
            "cycle_kind": self.cycle_kind,
            "w1": self.w1,
            "q_m": self.q_m,
            "w_erg": self.w_erg,
            "w2": self.w2,
            "q_res": self.q_res,
            "w_total": self.w_total,
            "eta": self.eta,
            "ordering": self.ordering.tag,
            "is_engine": self.is_engine,
            "coherence": self.coherence,
        }


def _efficiency(w_total: float, q_m: float) -> float:
    return w_total / q_m if q_m > get_tolerances().engine else float("nan")


def _measure(p: np.ndarray, spec: MeasurementSpec, levels: Spectrum, method: str) -> tuple[np.ndarray, float]:
    kind = spec.axis_kind() if method == "auto" else None
    if kind == "zz":
        # diagonal in the product basis and symmetric in |01>, |10>: no coherence is created
        return post_probs(p, spec), 0.0
    p_pm, rho_pm = channel_post_probs(p, spec, return_state=True)
    if kind is not None:
        p_pm = post_probs(p, spec)
    coherence = energy_basis_coherence(rho_pm, levels)
    if coherence > get_tolerances().coherence:
        log.debug("post-measurement state carries energy-basis coherence %.3e", coherence)
    return p_pm, coherence


def _ramped_cycle(params: EngineParams, spec: MeasurementSpec, extract: bool, method: str) -> StrokeLedger:
    s1: Spectrum = analytic_spectrum(params.B1, params.J)
    s2: Spectrum = analytic_spectrum(params.B2, params.J)
    e1, e2 = s1.energies, s2.energies
    p = boltzmann(e2, params.beta)
    p_pm, coherence = _measure(p, spec, s1, method)
    if extract:
        w_erg, p_final, ordering = ergotropy_extract(p_pm, s1)
    else:
        _, _, ordering = ergotropy_extract(p_pm, s1)
        w_erg, p_final = 0.0, p_pm
    w1 = float((e1 - e2) @ p)
    q_m = float(e1 @ (p_pm - p))
    w2 = float((e2 - e1) @ p_final)
    q_res = float(e2 @ (p - p_final))
    w_total = -(w1 + w_erg + w2)
    return StrokeLedger(
        cycle_kind=FIVE if extract else FOUR,
        w1=w1,
        q_m=q_m,
        w_erg=w_erg,
        w2=w2,
        q_res=q_res,
        w_total=w_total,
        eta=_efficiency(w_total, q_m),
        ordering=ordering,
        p=p,
        p_pm=p_pm,
        p_final=p_final,
        energies_meas=e1,
        energies_res=e2,
        coherence=coherence,
    )


def run_five_stroke(params: EngineParams, spec: MeasurementSpec, *, method: str = "auto") -> StrokeLedger:
    """Ramp, measure, extract ergotropy, ramp back, thermalize.

    ``method="channel"`` forces the dense Kraus channel even where a closed
    form for the post-measurement populations exists.
    """
    return _ramped_cycle(params, spec, True, method)


def run_four_stroke(params: EngineParams, spec: MeasurementSpec, *, method: str = "auto") -> StrokeLedger:
    """Same as the five-stroke cycle without the ergotropy stroke.

    ``ordering`` still reports whether the post-measurement state was active.
    """
    return _ramped_cycle(params, spec, False, method)


def run_three_stroke(
    params: EngineParams,
    spec: MeasurementSpec,
    *,
    field_value: float | None = None,
    method: str = "auto",
) -> StrokeLedger:
    """Measure, extract ergotropy and thermalize, all at one field.

    The field defaults to ``params.B2``; ``params.B1`` is not used. Passing
    ``field_value`` runs the whole cycle (including the reservoir state) at
    that field instead.
    """
    b = params.B2 if field_value is None else field_value
    s = analytic_spectrum(b, params.J)
    e = s.energies
    p = boltzmann(e, params.beta)
    p_pm, coherence = _measure(p, spec, s, method)
    w_erg, p_final, ordering = ergotropy_extract(p_pm, s)
    q_m = float(e @ (p_pm - p))
    q_res = float(e @ (p - p_final))
    w_total = -w_erg
    return StrokeLedger(
        cycle_kind=THREE,
        w1=0.0,
        q_m=q_m,
        w_erg=w_erg,
        w2=0.0,
        q_res=q_res,
        w_total=w_total,
        eta=_efficiency(w_total, q_m),
        ordering=ordering,
        p=p,
        p_pm=p_pm,
        p_final=p_final,
        energies_meas=e,
        energies_res=e,
        coherence=coherence,
    )


@dataclass(frozen=True)
class IdentityCheck:
    lhs: float
    rhs: float
    residual: float


def verify_work_identity(params: EngineParams, spec: MeasurementSpec, *, method: str = "auto") -> IdentityCheck:
    """Compare five-stroke work with the sum of four- and three-stroke work."""
    w5 = run_five_stroke(params, spec, method=method).w_total
    w4 = run_four_stroke(params, spec, method=method).w_total
    w3 = run_three_stroke(params, spec, method=method).w_total
    rhs = w4 + w3
    return IdentityCheck(lhs=w5, rhs=rhs, residual=abs(w5 - rhs))


RUNNERS = {"five": run_five_stroke, "four": run_four_stroke, "three": run_three_stroke}


def run_cycle(kind: str, params: EngineParams, spec: MeasurementSpec, **kwargs) -> StrokeLedger:
    try:
        runner = RUNNERS[kind.lower()]
    except KeyError:
        raise ValueError(f"unknown cycle kind {kind!r}; expected one of {sorted(RUNNERS)}") from None
    return runner(params, spec, **kwargs)


__all__ = [
    "FIVE",
    "FOUR",
    "THREE",
    "PASSIVE",
    "IdentityCheck",
    "StrokeLedger",
    "run_cycle",
    "run_five_stroke",
    "run_four_stroke",
    "run_three_stroke",
    "verify_work_identity",
]
