"""Passive states and ergotropy of energy-diagonal populations.

All states handled by the cycle drivers are summarized by their populations
in the energy eigenbasis, so the passive state is reached by a permutation:
the largest population goes to the lowest level, and so on. Work sign
convention: ergotropy is reported as the energy change of the system, which is
negative (or zero) when work is extracted.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import sqrt

import numpy as np

from .analytics import zz_chi
from .config import get_tolerances
from .core import Spectrum, occupation_dist
from .errors import InconsistentInput
from .measurement import zz_kappa

R1 = "R1"
R2 = "R2"
PASSIVE = "PASSIVE"
OTHER_ACTIVE = "OTHER_ACTIVE"

# passive arrangement for the two active z-z orderings, 0-based level indices
_R1_ORDER = (0, 2, 1, 3)
_R2_ORDER = (1, 0, 2, 3)


@dataclass(frozen=True)
class OrderingClass:
    """Which population ordering was found.

    ``permutation[k]`` is the input level whose population ends up on level
    ``k`` of the passive state. ``ties`` lists level pairs with populations
    equal within the tie tolerance.
    """

    tag: str
    permutation: tuple[int, ...]
    ties: tuple[tuple[int, int], ...] = ()

    @property
    def is_passive(self) -> bool:
        return self.tag == PASSIVE


def _ties(p: np.ndarray, tol: float) -> tuple[tuple[int, int], ...]:
    n = len(p)
    return tuple((i, j) for i in range(n) for j in range(i + 1, n) if abs(p[i] - p[j]) <= tol)


def passive_permutation(p, tie_tol: float | None = None) -> tuple[int, ...]:
    """Indices sorting ``p`` into descending order.

    Populations within ``tie_tol`` of each other keep their original order.
    """
    tol = get_tolerances().tie if tie_tol is None else tie_tol
    p = np.asarray(p, dtype=float)

    def cmp(i, j):
        if abs(p[i] - p[j]) <= tol:
            return i - j
        return -1 if p[i] > p[j] else 1

    return tuple(sorted(range(len(p)), key=functools.cmp_to_key(cmp)))


def is_active(p, spec: Spectrum) -> bool:
    """True iff some lower level holds less population than a higher one."""
    tol = get_tolerances()
    p = np.asarray(p, dtype=float)
    e = spec.energies
    n = len(p)
    for m in range(n):
        for k in range(m + 1, n):
            if e[m] < e[k] - spec.degeneracy_tol and p[m] < p[k] - tol.tie:
                return True
    return False


def _tag_for(perm: tuple[int, ...], active: bool) -> str:
    if not active:
        return PASSIVE
    if perm == _R1_ORDER:
        return R1
    if perm == _R2_ORDER:
        return R2
    return OTHER_ACTIVE


def ergotropy_extract(p, spec: Spectrum) -> tuple[float, np.ndarray, OrderingClass]:
    """Extract ergotropy from populations ``p`` on the levels of ``spec``.

    Returns:
        ``(w_erg, p_passive, ordering)``. ``w_erg`` = sum_n E_n (p'_n - p_n)
        is zero for passive input and negative otherwise.
    """
    p = occupation_dist(p)
    tie = get_tolerances().tie
    ties = _ties(p, tie)
    if not is_active(p, spec):
        return 0.0, p.copy(), OrderingClass(PASSIVE, tuple(range(len(p))), ties)
    perm = passive_permutation(p, tie)
    p_passive = p[list(perm)]
    e = spec.energies
    w_erg = float(e @ p_passive - e @ p)
    return w_erg, p_passive, OrderingClass(_tag_for(perm, True), perm, ties)


def brute_force_ergotropy(p, energies) -> float:
    """max over all permutations pi of sum_n E_n (p_n - p_pi(n)).

    Exhaustive; only meant as an independent check for small dimension.
    """
    p = np.asarray(p, dtype=float)
    e = np.asarray(energies, dtype=float)
    base = e @ p
    best = 0.0
    for perm in itertools.permutations(range(len(p))):
        best = max(best, base - e @ p[list(perm)])
    return float(best)


def classify_zz(p_pm, p) -> OrderingClass:
    """Classify a z-z post-measurement distribution as R1, R2 or passive.

    Raises:
        InconsistentInput: if levels 2 and 4 changed, which a z-z
            measurement never does.
    """
    tol = get_tolerances().tie
    p_pm = np.asarray(p_pm, dtype=float)
    p = np.asarray(p, dtype=float)
    if abs(p_pm[1] - p[1]) > tol or abs(p_pm[3] - p[3]) > tol:
        raise InconsistentInput("levels 2 and 4 must be untouched by a z-z measurement")
    ties = _ties(p_pm, tol)
    if p_pm[2] > p[1] + tol:
        return OrderingClass(R1, _R1_ORDER, ties)
    if p[1] > p_pm[0] + tol:
        return OrderingClass(R2, _R2_ORDER, ties)
    return OrderingClass(PASSIVE, (0, 1, 2, 3), ties)


def r1_c0_interval(B2: float, J: float, beta: float) -> tuple[float, float] | None:
    """Open interval of c0 for which the z-z measurement yields the R1 ordering.

    None when no strength works (chi >= 1/2).
    """
    chi = zz_chi(B2, J, beta)
    if chi >= 0.5:
        return None
    root = sqrt(1 - 2 * chi)
    return sqrt((1 - root) / 4), sqrt((1 + root) / 4)


def r1_holds(c0: float, B2: float, J: float, beta: float) -> bool:
    return zz_kappa(c0) > zz_chi(B2, J, beta)
