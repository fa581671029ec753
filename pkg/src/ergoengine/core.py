"""Dense linear algebra for small quantum systems.

Hermitian diagonalization, thermal states, non-selective Kraus channels and
population/energy read-out. These are the brute-force routines against which
the closed-form results elsewhere in the package are checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import get_tolerances
from .errors import (
    DimensionMismatch,
    IncompleteKraus,
    InvalidDistribution,
    NonHermitianInput,
)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ascending eigenvalues with orthonormal eigenvectors stored as columns."""

    energies: np.ndarray
    eigenvectors: np.ndarray
    degeneracy_tol: float = field(default_factory=lambda: get_tolerances().degeneracy)

    @property
    def dim(self) -> int:
        return len(self.energies)


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def is_hermitian(a, tol: float | None = None) -> bool:
    tol = get_tolerances().hermitian if tol is None else tol
    m = np.asarray(a)
    return bool(np.max(np.abs(m - m.conj().T), initial=0.0) <= tol)


def _require_hermitian(m: np.ndarray) -> None:
    if not is_hermitian(m):
        dev = np.max(np.abs(m - m.conj().T))
        raise NonHermitianInput(f"matrix is not Hermitian (max |H - H^dag| = {dev:.3e})")


def check_density_matrix(rho) -> np.ndarray:
    """Validate ``rho`` as a density matrix and return it as a complex array."""
    tol = get_tolerances()
    m = as_matrix(rho)
    _require_hermitian(m)
    tr = np.trace(m).real
    if abs(tr - 1.0) > tol.trace:
        raise InvalidDistribution(f"trace {tr!r} differs from 1")
    lo = np.linalg.eigvalsh(m)[0]
    if lo < -tol.positivity:
        raise InvalidDistribution(f"negative eigenvalue {lo:.3e}")
    return m


def occupation_dist(probs) -> np.ndarray:
    """Validate a probability vector, clamping round-off excursions into [0, 1]."""
    tol = get_tolerances()
    p = np.asarray(probs, dtype=float).reshape(-1)
    if np.any(p < -tol.prob_clamp) or np.any(p > 1 + tol.prob_clamp):
        raise InvalidDistribution(f"probabilities outside [0, 1]: {p}")
    p = np.clip(p, 0.0, 1.0)
    if abs(p.sum() - 1.0) > tol.normalization:
        raise InvalidDistribution(f"probabilities sum to {p.sum()!r}")
    return p


def _fix_phases(vecs: np.ndarray) -> np.ndarray:
    # largest-magnitude component of each column made real and positive
    idx = np.argmax(np.abs(vecs), axis=0)
    pivots = vecs[idx, np.arange(vecs.shape[1])]
    return vecs * (np.abs(pivots) / pivots)


def eig_hermitian(h) -> Spectrum:
    """Diagonalize a Hermitian matrix.

    Eigenvalues are returned in ascending order. Each eigenvector has its
    largest-magnitude component rotated onto the positive real axis, so the
    output is reproducible between calls.

    Raises:
        NonHermitianInput: if ``h`` fails the Hermiticity check.
    """
    m = as_matrix(h)
    _require_hermitian(m)
    w, v = np.linalg.eigh(0.5 * (m + m.conj().T))
    return Spectrum(energies=w, eigenvectors=_fix_phases(v))


def boltzmann(energies, beta: float) -> np.ndarray:
    """Boltzmann weights exp(-beta E_n)/Z, shifted for overflow safety."""
    if beta < 0:
        raise ValueError("beta must be non-negative")
    e = np.asarray(energies, dtype=float)
    w = np.exp(-beta * (e - e.min()))
    return w / w.sum()


def gibbs_state(h, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """Thermal state of ``h`` at inverse temperature ``beta``.

    Built in the eigenbasis rather than by matrix exponential, which keeps it
    finite at large ``beta``.

    Returns:
        ``(rho, p)``: the density matrix and the Boltzmann populations in the
        ascending-energy order of :func:`eig_hermitian`.
    """
    spec = eig_hermitian(h)
    p = boltzmann(spec.energies, beta)
    v = spec.eigenvectors
    rho = (v * p) @ v.conj().T
    return rho, p


def density_from_populations(p, eigenvectors) -> np.ndarray:
    v = np.asarray(eigenvectors, dtype=complex)
    p = np.asarray(p, dtype=float)
    if v.shape[1] != len(p):
        raise DimensionMismatch("populations and eigenvectors disagree in dimension")
    return (v * p) @ v.conj().T


def _operators(kraus) -> list[np.ndarray]:
    ops = getattr(kraus, "operators", kraus)
    return [np.asarray(m, dtype=complex) for m in ops]


def kraus_completeness_error(kraus) -> float:
    ops = _operators(kraus)
    d = ops[0].shape[0]
    total = sum(m @ m.conj().T for m in ops)
    return float(np.max(np.abs(total - np.eye(d))))


def validate_kraus(kraus) -> bool:
    """True iff sum_a M_a M_a^dag equals the identity within tolerance."""
    return kraus_completeness_error(kraus) <= get_tolerances().kraus


def apply_channel(rho, kraus, *, check: bool = True) -> np.ndarray:
    """Non-selective measurement: rho -> sum_a M_a rho M_a^dag.

    ``kraus`` is a :class:`~ergoengine.measurement.KrausSet` or any sequence of
    square arrays.
    """
    ops = _operators(kraus)
    m = np.asarray(rho, dtype=complex)
    if check:
        m = check_density_matrix(m)
        if any(op.shape != m.shape for op in ops):
            raise DimensionMismatch("Kraus operator and state dimensions differ")
        err = kraus_completeness_error(ops)
        if err > get_tolerances().kraus:
            raise IncompleteKraus(f"sum M M^dag deviates from identity by {err:.3e}")
    stack = np.stack(ops)
    out = np.einsum("aij,jk,alk->il", stack, m, stack.conj())
    return 0.5 * (out + out.conj().T)


def occupations(rho, spec: Spectrum) -> np.ndarray:
    """Populations <psi_n|rho|psi_n> in the order of ``spec``."""
    m = np.asarray(rho, dtype=complex)
    v = spec.eigenvectors
    if m.shape != (v.shape[0], v.shape[0]):
        raise DimensionMismatch(f"state shape {m.shape} vs spectrum dim {v.shape[0]}")
    diag = np.einsum("in,ij,jn->n", v.conj(), m, v)
    if np.max(np.abs(diag.imag)) >= get_tolerances().imag:
        raise ValueError("populations have a non-negligible imaginary part")
    return occupation_dist(diag.real)


def energy_basis_coherence(rho, spec: Spectrum) -> float:
    """Largest off-diagonal magnitude of ``rho`` in the eigenbasis of ``spec``."""
    v = spec.eigenvectors
    r = v.conj().T @ np.asarray(rho, dtype=complex) @ v
    off = r - np.diag(np.diag(r))
    return float(np.max(np.abs(off), initial=0.0))


def mean_energy(rho, h) -> float:
    """tr(rho H)."""
    m = np.asarray(rho, dtype=complex)
    hm = as_matrix(h)
    if m.shape != hm.shape:
        raise DimensionMismatch(f"state shape {m.shape} vs Hamiltonian shape {hm.shape}")
    _require_hermitian(hm)
    e = np.trace(m @ hm)
    if abs(e.imag) >= get_tolerances().imag * max(1.0, abs(e.real)):
        raise ValueError("tr(rho H) has a non-negligible imaginary part")
    return float(e.real)


def von_neumann_entropy(rho) -> float:
    w = np.linalg.eigvalsh(np.asarray(rho, dtype=complex))
    w = w[w > 1e-300]
    return float(-np.sum(w * np.log(w)))

