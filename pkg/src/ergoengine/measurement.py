"""Two-outcome-per-qubit spin measurements of tunable strength.

Each qubit is measured along a unit vector n = (sin t cos f, sin t sin f, cos t)
with the pair of operators c0 I +/- c1 sigma.n, and the two-qubit Kraus set is
the four tensor products. c0 = c1 = 1/2 is projective, c0 = 1/sqrt(2) is the
identity channel.

Populations after the channel are given here both in closed form (z-z, x-x
and the projective special cases) and via the dense channel in
:mod:`ergoengine.core`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, pi, sin, sqrt

import numpy as np

from .config import get_tolerances
from .core import Spectrum, apply_channel, density_from_populations, occupation_dist, occupations
from .errors import InconsistentInput, InvalidStrength
from .model import EIGENVECTORS, I2, SX, SY, SZ

C0_MAX = 1 / sqrt(2)

Z_AXIS = (0.0, 0.0)
X_AXIS = (pi / 2, 0.0)
Y_AXIS = (pi / 2, pi / 2)

# named direction pairs (qubit A, qubit B) used by the CLI and the figures
PRESET_DIRECTIONS = {
    "zz": (Z_AXIS, Z_AXIS),
    "xx": (X_AXIS, X_AXIS),
    "xy": (X_AXIS, Y_AXIS),
    "xz": (X_AXIS, Z_AXIS),
}

_ENERGY_BASIS = Spectrum(energies=np.arange(4.0), eigenvectors=EIGENVECTORS)


@dataclass(frozen=True)
class MeasurementSpec:
    c0: float
    dirA: tuple[float, float] = Z_AXIS
    dirB: tuple[float, float] = Z_AXIS

    def __post_init__(self):
        if not (np.isfinite(self.c0) and 0.0 <= self.c0 <= C0_MAX + 1e-15):
            raise InvalidStrength(f"c0 must lie in [0, 1/sqrt(2)], got {self.c0}")
        angles = (*self.dirA, *self.dirB)
        if len(angles) != 4 or not all(np.isfinite(angles)):
            raise ValueError(f"directions must be finite (theta, phi) pairs, got {self.dirA}, {self.dirB}")

    @property
    def c1(self) -> float:
        return sqrt(max(0.5 - self.c0**2, 0.0))

    @classmethod
    def preset(cls, name: str, c0: float) -> "MeasurementSpec":
        a, b = PRESET_DIRECTIONS[name]
        return cls(c0, a, b)

    def axis_kind(self) -> str | None:
        """'zz' or 'xx' when both directions sit on that axis, else None."""
        tol = get_tolerances().axis
        for name in ("zz", "xx"):
            target = PRESET_DIRECTIONS[name]
            if all(_same_direction(d, t, tol) for d, t in zip((self.dirA, self.dirB), target)):
                return name
        return None


def _same_direction(d, target, tol) -> bool:
    return float(np.linalg.norm(unit_vector(*d) - unit_vector(*target))) <= tol


def unit_vector(theta: float, phi: float) -> np.ndarray:
    return np.array([sin(theta) * cos(phi), sin(theta) * sin(phi), cos(theta)])


def spin_along(theta: float, phi: float) -> np.ndarray:
    nx, ny, nz = unit_vector(theta, phi)
    return nx * SX + ny * SY + nz * SZ


@dataclass(frozen=True, eq=False)
class KrausSet:
    """Operators ordered (+,+), (+,-), (-,+), (-,-)."""

    operators: tuple[np.ndarray, ...]
    spec: MeasurementSpec


def build_kraus(spec: MeasurementSpec) -> KrausSet:
    c0, c1 = spec.c0, spec.c1
    na, nb = spin_along(*spec.dirA), spin_along(*spec.dirB)
    ops = tuple(
        np.kron(c0 * I2 + sa * c1 * na, c0 * I2 + sb * c1 * nb)
        for sa in (1, -1)
        for sb in (1, -1)
    )
    return KrausSet(operators=ops, spec=spec)


def channel_post_probs(p, spec: MeasurementSpec, *, return_state: bool = False):
    """Populations after the dense channel, for a state diagonal in the energy basis.

    If ``return_state`` is set, also returns the post-measurement density
    matrix (in the computational basis).
    """
    p = occupation_dist(p)
    rho = density_from_populations(p, EIGENVECTORS)
    out = apply_channel(rho, build_kraus(spec), check=False)
    p_pm = occupations(out, _ENERGY_BASIS)
    return (p_pm, out) if return_state else p_pm


def _check_c0(c0: float) -> None:
    if not 0.0 <= c0 <= C0_MAX + 1e-15:
        raise InvalidStrength(f"c0 must lie in [0, 1/sqrt(2)], got {c0}")


def zz_kappa(c0: float) -> float:
    """Transfer fraction 4 c0^2 (1 - 2 c0^2) between levels 1 and 3."""
    return 4 * c0**2 * (1 - 2 * c0**2)


def zz_post_probs(p, c0: float) -> np.ndarray:
    """Closed-form populations after a z-z measurement of strength ``c0``."""
    _check_c0(c0)
    p = occupation_dist(p)
    shift = zz_kappa(c0) * (p[0] - p[2])
    return np.array([p[0] - shift, p[1], p[2] + shift, p[3]])


def xx_post_probs(p, c0: float) -> np.ndarray:
    """Closed-form populations after an x-x measurement of strength ``c0``."""
    _check_c0(c0)
    p = occupation_dist(p)
    c0s = c0**2
    c1s = 0.5 - c0s
    a, b, m = 4 * c0s**2, 4 * c1s**2, 4 * c0s * c1s
    p1, p2, p3, p4 = p
    return np.array(
        [
            (a + b) * p1 + m * (p2 + p4),
            a * p2 + b * p4 + m * (p1 + p3),
            (a + b) * p3 + m * (p2 + p4),
            a * p4 + b * p2 + m * (p1 + p3),
        ]
    )


def projective_post_probs(p, dirA, dirB) -> np.ndarray:
    """Populations after projective (c0 = 1/2) measurements along arbitrary axes.

    Computed with the dense channel. The result is checked against
    p2' - p4' = (cos^2 tA + cos^2 tB)(p2 - p4) / 2.
    """
    p = occupation_dist(p)
    out = channel_post_probs(p, MeasurementSpec(0.5, tuple(dirA), tuple(dirB)))
    expected_gap = 0.5 * (cos(dirA[0]) ** 2 + cos(dirB[0]) ** 2) * (p[1] - p[3])
    if abs((out[1] - out[3]) - expected_gap) > 1e-12:
        raise ArithmeticError(
            f"p2-p4 gap {out[1] - out[3]!r} disagrees with closed form {expected_gap!r}"
        )
    return out


def xz_projective_post_probs(p) -> np.ndarray:
    """Projective x on qubit A, z on qubit B.

    Levels 1 and 3 end at exactly 1/4 and level 2 stays at or above level 4.
    """
    p = occupation_dist(p)
    out = channel_post_probs(p, MeasurementSpec.preset("xz", 0.5))
    tol = 1e-12
    if abs(out[0] - 0.25) > tol or abs(out[2] - 0.25) > tol:
        raise InconsistentInput(f"x-z projective output lacks p1 = p3 = 1/4: {out}")
    if np.all(np.diff(p) <= 0) and not (out[1] >= 0.25 - tol and out[3] <= 0.25 + tol):
        raise InconsistentInput(f"x-z projective ordering violated for ordered input: {out}")
    return out


def post_probs(p, spec: MeasurementSpec, *, method: str = "auto") -> np.ndarray:
    """Post-measurement populations, using a closed form when one applies.

    ``method`` is ``"auto"`` (closed form on the z-z and x-x axes, dense
    channel otherwise) or ``"channel"`` (always dense).
    """
    if method == "auto":
        kind = spec.axis_kind()
        if kind == "zz":
            return zz_post_probs(p, spec.c0)
        if kind == "xx":
            return xx_post_probs(p, spec.c0)
    elif method != "channel":
        raise ValueError(f"unknown method {method!r}")
    return channel_post_probs(p, spec)
