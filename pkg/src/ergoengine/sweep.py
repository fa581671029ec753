"""Grid and random sweeps driven by a flat ``key = value`` config file.

Example config::

    # z-z strength scan
    meas = zz
    kind = five
    c0 = linspace(0, 0.7071067811865476, 50)
    B1 = 3.5
    B2 = 3
    J = 1
    beta = 1, 2
    tol.tie = 1e-12

Grid values are a comma-separated list or ``linspace(start, stop, num)``.
Angles default to the ``meas`` preset. ``random = N`` (with ``seed``)
replaces the grid by N random in-regime points over all directions.
"""

from __future__ import annotations

import itertools
import logging
import math
import re
from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np

from .config import Tolerances, tolerances
from .cycle import run_cycle, verify_work_identity
from .errors import EngineError
from .measurement import C0_MAX, PRESET_DIRECTIONS, MeasurementSpec
from .model import EngineParams

log = logging.getLogger(__name__)

GRID_KEYS = ("c0", "B1", "B2", "J", "beta", "thetaA", "phiA", "thetaB", "phiB")
HEADER = list(GRID_KEYS) + [
    "kind", "w1", "q_m", "w_erg", "w2", "q_res", "w_total", "eta",
    "ordering", "is_engine", "coherence", "identity_residual",
]

_TOL_NAMES = {f.name for f in fields(Tolerances)}
_LINSPACE = re.compile(r"^linspace\(\s*([^,]+),\s*([^,]+),\s*(\d+)\s*\)$")


class ConfigError(ValueError):
    pass


@dataclass
class SweepConfig:
    grids: dict[str, list[float]] = field(default_factory=dict)
    meas: str = "zz"
    kind: str = "five"
    out: str | None = None
    random: int = 0
    seed: int = 0
    tol: dict[str, float] = field(default_factory=dict)


def _parse_grid(text: str) -> list[float]:
    text = text.strip()
    if not text:
        return []
    m = _LINSPACE.match(text)
    if m:
        return [float(x) for x in np.linspace(float(m[1]), float(m[2]), int(m[3]))]
    return [float(x) for x in text.split(",") if x.strip()]


def parse_config(text: str) -> SweepConfig:
    cfg = SweepConfig()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        try:
            if key in GRID_KEYS:
                cfg.grids[key] = _parse_grid(value)
            elif key == "meas":
                if value not in PRESET_DIRECTIONS and value != "custom":
                    raise ConfigError(f"unknown meas {value!r}")
                cfg.meas = value
            elif key == "kind":
                cfg.kind = value
            elif key == "out":
                cfg.out = value
            elif key == "random":
                cfg.random = int(value)
            elif key == "seed":
                cfg.seed = int(value)
            elif key.startswith("tol."):
                if key[4:] not in _TOL_NAMES:
                    raise ConfigError(f"unknown tolerance {key[4:]!r}")
                cfg.tol[key[4:]] = float(value)
            else:
                raise ConfigError(f"unknown key {key!r}")
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: {exc}") from None
    return cfg


def load_config(path) -> SweepConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"))


def _default_grids(cfg: SweepConfig) -> dict[str, list[float]]:
    grids = dict(cfg.grids)
    if cfg.meas != "custom":
        (ta, pa), (tb, pb) = PRESET_DIRECTIONS[cfg.meas]
        for k, v in zip(("thetaA", "phiA", "thetaB", "phiB"), (ta, pa, tb, pb)):
            grids.setdefault(k, [v])
    missing = [k for k in GRID_KEYS if k not in grids]
    if missing:
        raise ConfigError(f"missing grid(s): {missing}")
    return grids


def random_point(rng: np.random.Generator) -> dict[str, float]:
    """One uniformly drawn in-regime parameter point over all directions."""
    J = float(rng.uniform(0.25, 3.0))
    B1 = float(rng.uniform(0.0, 4 * J))
    B2 = float(rng.uniform(0.0, B1))
    while B2 <= 0.0:
        B2 = float(rng.uniform(0.0, B1))
    return {
        "c0": float(rng.uniform(0.0, C0_MAX)),
        "B1": B1,
        "B2": B2,
        "J": J,
        "beta": float(rng.uniform(0.05, 5.0)),
        "thetaA": float(rng.uniform(0.0, math.pi)),
        "phiA": float(rng.uniform(0.0, 2 * math.pi)),
        "thetaB": float(rng.uniform(0.0, math.pi)),
        "phiB": float(rng.uniform(0.0, 2 * math.pi)),
    }


def iter_points(cfg: SweepConfig):
    if cfg.random:
        rng = np.random.default_rng(cfg.seed)
        for _ in range(cfg.random):
            yield random_point(rng)
        return
    grids = _default_grids(cfg)
    for values in itertools.product(*(grids[k] for k in GRID_KEYS)):
        yield dict(zip(GRID_KEYS, values))


def build_inputs(point: dict[str, float]) -> tuple[EngineParams, MeasurementSpec]:
    params = EngineParams(point["B1"], point["B2"], point["J"], point["beta"])
    spec = MeasurementSpec(point["c0"], (point["thetaA"], point["phiA"]), (point["thetaB"], point["phiB"]))
    return params, spec


def evaluate_point(point: dict[str, float], kind: str) -> list:
    params, spec = build_inputs(point)
    ledger = run_cycle(kind, params, spec)
    residual = verify_work_identity(params, spec).residual
    d = ledger.as_dict()
    return [point[k] for k in GRID_KEYS] + [
        kind, d["w1"], d["q_m"], d["w_erg"], d["w2"], d["q_res"], d["w_total"], d["eta"],
        d["ordering"], d["is_engine"], d["coherence"], residual,
    ]


def run_sweep(cfg: SweepConfig) -> tuple[list[str], list[list], list[tuple[dict, str]]]:
    """Evaluate every point in grid order.

    Returns:
        ``(header, rows, skipped)`` where ``skipped`` pairs each rejected point
        with the reason.
    """
    rows, skipped = [], []
    with tolerances(**cfg.tol):
        for point in iter_points(cfg):
            try:
                rows.append(evaluate_point(point, cfg.kind))
            except EngineError as exc:
                log.warning("skipping %s: %s", point, exc)
                skipped.append((point, str(exc)))
    return list(HEADER), rows, skipped


__all__ = [
    "ConfigError",
    "HEADER",
    "SweepConfig",
    "build_inputs",
    "iter_points",
    "load_config",
    "parse_config",
    "random_point",
    "run_sweep",
]
