"""Parameter presets and data tables for the efficiency/energetics figures.

Each table has the swept variable as its first column and one column per
curve. Efficiencies restricted to an ordering (R1 for fig3/fig4, R2 for fig5)
are NaN where that ordering does not hold.
"""

from __future__ import annotations

import math

import numpy as np

from .cycle import run_five_stroke, run_four_stroke, run_three_stroke
from .ergotropy import R1, R2
from .measurement import C0_MAX, MeasurementSpec
from .model import EngineParams

GRID_POINTS = 400
BETAS = (1.0, 2.0, 3.0, 4.0)
FIG7_C0 = (0.1, 0.3, 0.5, 0.6, 0.7)

# B1 is not fixed by every figure: fig2/fig3 borrow B1 = 3.5 from the x-x figures
# (their curves do not depend on it except W_1, W_2); fig4/fig5 use B1 = B2 so
# that the whole J range stays inside 0 < B2 <= B1 < 4J.
PRESETS: dict[str, dict] = {
    "fig2": {"meas": "zz", "sweep": "c0", "range": (0.0, C0_MAX), "B1": 3.5, "B2": 3.0, "J": 1.0, "beta": 1.0},
    "fig3": {"meas": "zz", "sweep": "c0", "range": (0.0, C0_MAX), "B1": 3.5, "B2": 3.0, "J": 1.0, "beta": BETAS},
    "fig4": {"meas": "zz", "sweep": "J", "range": (0.8, 50.0), "B1": "B2", "B2": 3.0, "c0": 0.3, "beta": BETAS},
    "fig5": {"meas": "zz", "sweep": "c0", "range": (0.0, C0_MAX), "B1": "B2", "B2": 3.9, "J": 1.0, "beta": BETAS},
    "fig6": {"meas": "xx", "sweep": "c0", "range": (0.0, C0_MAX), "B1": 3.5, "B2": 3.0, "J": 1.0, "beta": 1.0},
    "fig7": {"meas": "xx", "sweep": "J", "range": (0.9, 10.0), "B1": 3.5, "B2": 3.0, "beta": 1.0, "c0": FIG7_C0},
    "fig8": {"meas": "xx", "sweep": "J", "range": (0.9, 50.0), "B1": 3.5, "B2": 3.0, "c0": 0.3, "beta": BETAS},
}


def grid(fig_id: str, num: int = GRID_POINTS) -> np.ndarray:
    lo, hi = PRESETS[fig_id]["range"]
    return np.linspace(lo, hi, num)


def describe_preset(fig_id: str) -> str:
    preset = PRESETS[fig_id]
    lines = [f"figure = {fig_id}", f"points = {GRID_POINTS}"]
    lines += [f"{k} = {v}" for k, v in preset.items()]
    return "\n".join(lines)


def _beta_tag(beta: float) -> str:
    return f"beta{beta:g}"


def _energetics_table(fig_id: str, num: int):
    pr = PRESETS[fig_id]
    params = EngineParams(pr["B1"], pr["B2"], pr["J"], pr["beta"])
    header = ["c0", "Q_M", "W_erg", "W_T", "W_1", "W_2", "Q_res", "W_T4", "W_T3", "ordering"]
    rows = []
    for c0 in grid(fig_id, num):
        spec = MeasurementSpec.preset(pr["meas"], float(c0))
        five = run_five_stroke(params, spec)
        four = run_four_stroke(params, spec)
        three = run_three_stroke(params, spec)
        rows.append(
            [float(c0), five.q_m, five.w_erg, five.w_total, five.w1, five.w2, five.q_res,
             four.w_total, three.w_total, five.ordering.tag]
        )
    return header, rows


def _ordering_eta(ledger, tag: str) -> float:
    return ledger.eta if ledger.ordering.tag == tag else math.nan


def _zz_vs_c0(fig_id: str, num: int, tag: str):
    pr = PRESETS[fig_id]
    header = ["c0"] + [f"eta_{_beta_tag(b)}" for b in pr["beta"]]
    b1 = pr["B2"] if pr["B1"] == "B2" else pr["B1"]
    rows = []
    for c0 in grid(fig_id, num):
        spec = MeasurementSpec.preset("zz", float(c0))
        row = [float(c0)]
        for beta in pr["beta"]:
            row.append(_ordering_eta(run_five_stroke(EngineParams(b1, pr["B2"], pr["J"], beta), spec), tag))
        rows.append(row)
    return header, rows


def _eta_vs_j(fig_id: str, num: int, tag: str | None):
    pr = PRESETS[fig_id]
    header = ["J"] + [f"eta_{_beta_tag(b)}" for b in pr["beta"]]
    b1 = pr["B2"] if pr["B1"] == "B2" else pr["B1"]
    spec = MeasurementSpec.preset(pr["meas"], pr["c0"])
    rows = []
    for j in grid(fig_id, num):
        row = [float(j)]
        for beta in pr["beta"]:
            ledger = run_five_stroke(EngineParams(b1, pr["B2"], float(j), beta), spec)
            row.append(ledger.eta if tag is None else _ordering_eta(ledger, tag))
        rows.append(row)
    return header, rows


def _fig7(num: int):
    pr = PRESETS["fig7"]
    header = ["J"] + [f"eta5_c0_{c0:g}" for c0 in pr["c0"]] + ["eta4_projective"]
    projective = MeasurementSpec.preset("xx", 0.5)
    rows = []
    for j in grid("fig7", num):
        params = EngineParams(pr["B1"], pr["B2"], float(j), pr["beta"])
        row = [float(j)]
        for c0 in pr["c0"]:
            row.append(run_five_stroke(params, MeasurementSpec.preset("xx", c0)).eta)
        row.append(run_four_stroke(params, projective).eta)
        rows.append(row)
    return header, rows


def figure_table(fig_id: str, num: int = GRID_POINTS) -> tuple[list[str], list[list]]:
    """Header and rows for one figure.

    Raises:
        KeyError: for an unknown figure id.
    """
    if fig_id not in PRESETS:
        raise KeyError(f"unknown figure {fig_id!r}; expected one of {sorted(PRESETS)}")
    if fig_id in ("fig2", "fig6"):
        return _energetics_table(fig_id, num)
    if fig_id == "fig3":
        return _zz_vs_c0(fig_id, num, R1)
    if fig_id == "fig5":
        return _zz_vs_c0(fig_id, num, R2)
    if fig_id == "fig4":
        return _eta_vs_j(fig_id, num, R1)
    if fig_id == "fig8":
        return _eta_vs_j(fig_id, num, None)
    return _fig7(num)
