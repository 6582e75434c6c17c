"""Drinfeld twists: constructors, the cocycle verifier and the identity suite."""

from .cg import (
    IdentityResult,
    cg_hat_twist,
    cg_regular_twist,
    five_term_check,
    fq_twist,
    jordanian_l1_classical,
    jordanian_l1_twist,
)
from .cm import cm_algebra_suite, cm_twist_chain, d1_algebra, dq_algebra, h1_prime
from .core import (
    Twist,
    TwistedHopf,
    TwistReport,
    classical_recheck,
    coboundary_twist,
    cocycle_check,
    counit_check,
    identity_twist,
    semiclassical_r,
    specialize_twist,
)
from .identities import IDENTITY_NAMES, identity_suite, run_identity
from .jordanian import closed_formula_check, jordanian_twist, semiclassical_r_check, w_singularity

__all__ = [
    "IDENTITY_NAMES",
    "IdentityResult",
    "Twist",
    "TwistReport",
    "TwistedHopf",
    "cg_hat_twist",
    "cg_regular_twist",
    "classical_recheck",
    "cm_algebra_suite",
    "cm_twist_chain",
    "coboundary_twist",
    "cocycle_check",
    "counit_check",
    "d1_algebra",
    "dq_algebra",
    "closed_formula_check",
    "five_term_check",
    "fq_twist",
    "h1_prime",
    "identity_suite",
    "identity_twist",
    "jordanian_twist",
    "run_identity",
    "jordanian_l1_classical",
    "jordanian_l1_twist",
    "semiclassical_r",
    "semiclassical_r_check",
    "specialize_twist",
    "w_singularity",
]
