"""Numerical tolerances.

Defaults live in :data:`DEFAULT`. They can be overridden for a block of code
with :func:`tolerances`, which is context-local and therefore safe under
threads and asyncio::

    with tolerances(tie=1e-9):
        ergotropy_extract(p, spec)
"""

from __future__ import annotations

import contextlib
import contextvars
import dataclasses
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    hermitian: float = 1e-12
    trace: float = 1e-12
    positivity: float = 1e-12
    prob_clamp: float = 1e-12
    normalization: float = 1e-10
    kraus: float = 1e-10
    imag: float = 1e-12
    degeneracy: float = 1e-9
    tie: float = 1e-12
    axis: float = 1e-12
    coherence: float = 1e-10
    engine: float = 1e-12


DEFAULT = Tolerances()

_current: contextvars.ContextVar[Tolerances] = contextvars.ContextVar("ergoengine_tol", default=DEFAULT)


def get_tolerances() -> Tolerances:
    return _current.get()


@contextlib.contextmanager
def tolerances(**overrides: float):
    """Temporarily override named tolerances in the current context."""
    unknown = set(overrides) - {f.name for f in dataclasses.fields(Tolerances)}
    if unknown:
        raise KeyError(f"unknown tolerance(s): {sorted(unknown)}")
    token = _current.set(dataclasses.replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
