"""Measurement-fueled two-qubit heat engine with an ergotropy-extraction stroke."""

from .config import Tolerances, get_tolerances, tolerances
from .core import (
    Spectrum,
    apply_channel,
    eig_hermitian,
    gibbs_state,
    kraus_completeness_error,
    mean_energy,
    occupation_dist,
    occupations,
    validate_kraus,
)
from .cycle import (
    StrokeLedger,
    run_five_stroke,
    run_four_stroke,
    run_three_stroke,
    verify_work_identity,
)
from .ergotropy import (
    OrderingClass,
    brute_force_ergotropy,
    classify_zz,
    ergotropy_extract,
    is_active,
    r1_c0_interval,
)
from .errors import *  # noqa: F401,F403
from .measurement import KrausSet, MeasurementSpec, build_kraus, channel_post_probs, post_probs
from .model import EngineParams, analytic_spectrum, hamiltonian

__version__ = "0.1.0"
