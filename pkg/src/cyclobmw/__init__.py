"""Exact computational algebra for cyclotomic BMW and Brauer algebras."""

from .laurent import LaurentPoly, LaurentRing, NotAUnit, NotSquare, PolyMatrix
from .envs import MissingValue, ParamEnv, make_omega_env, specialize
from .admissibility import (
    AdmissibilityReport,
    DegenerateParameters,
    compute_B,
    compute_beta,
    compute_h,
    compute_h_prime,
    is_admissible,
    is_weak_admissible,
    make_Rc_env,
    make_admissible_env,
    theta_neg,
)

__version__ = "0.1.0"
