"""Two qubits with isotropic Heisenberg exchange in a uniform field.

Basis order is |00>, |01>, |10>, |11> with sigma_z|0> = +|0>, so |00> is the
top level 2J + 2B.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Spectrum
from .errors import RegimeViolation

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)

_S = 1 / np.sqrt(2)
# columns: psi_-, |11>, psi_+, |00>; independent of B
EIGENVECTORS = np.array(
    [
        [0, 0, 0, 1],
        [-_S, 0, _S, 0],
        [_S, 0, _S, 0],
        [0, 1, 0, 0],
    ],
    dtype=complex,
)


@dataclass(frozen=True)
class EngineParams:
    """Field values, coupling and reservoir inverse temperature for one cycle.

    B2 is the field at thermalization and B1 the field at which the
    measurement is made. Construction enforces J > 0, 0 < B2 <= B1 < 4J and
    beta > 0.
    """

    B1: float
    B2: float
    J: float
    beta: float

    def __post_init__(self):
        vals = (self.B1, self.B2, self.J, self.beta)
        if not all(np.isfinite(vals)):
            raise RegimeViolation(f"non-finite parameter in {vals}")
        if self.J <= 0:
            raise RegimeViolation(f"J must be positive (antiferromagnetic), got {self.J}")
        if not 0 < self.B2 <= self.B1 < 4 * self.J:
            raise RegimeViolation(
                f"need 0 < B2 <= B1 < 4J, got B1={self.B1}, B2={self.B2}, 4J={4 * self.J}"
            )
        if self.beta <= 0:
            raise RegimeViolation(f"beta must be positive, got {self.beta}")


def hamiltonian(B: float, J: float) -> np.ndarray:
    """B (sz x I + I x sz) + 2J sum_i s_i x s_i as a 4x4 matrix."""
    zeeman = np.kron(SZ, I2) + np.kron(I2, SZ)
    exchange = np.kron(SX, SX) + np.kron(SY, SY) + np.kron(SZ, SZ)
    return B * zeeman + 2 * J * exchange


def spectrum_energies(B: float, J: float) -> np.ndarray:
    """(-6J, 2J-2B, 2J, 2J+2B), no regime check."""
    return np.array([-6 * J, 2 * J - 2 * B, 2 * J, 2 * J + 2 * B], dtype=float)


def analytic_spectrum(B: float, J: float) -> Spectrum:
    """Closed-form spectrum, valid (ascending) for 0 < B < 4J.

    Raises:
        RegimeViolation: outside the strong-coupling window.
    """
    if not (J > 0 and 0 < B < 4 * J):
        raise RegimeViolation(f"ascending order requires 0 < B < 4J, got B={B}, J={J}")
    return Spectrum(energies=spectrum_energies(B, J), eigenvectors=EIGENVECTORS.copy())
