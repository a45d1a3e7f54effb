"""Cyclic codes over finite fields and the uncertainty invariant mu_{F,p}."""

__version__ = "0.1.0"

from .gf import FieldElement, FieldSpec, build_extension, prime_field
from .ring import Factorization, RingElement, factor_xp_minus_1, ideal_dim, zeros_count
from .ideals import BudgetExceeded, IdealDescriptor, enumerate_ideals, ideal_from_generator, ideals_in_dim_range
from .codes import CyclicCode, DistanceResult, min_distance_exact, min_distance_upper, quadratic_residue_code
from .uncertainty import MuReport, mu_bruteforce, mu_via_ideals

__all__ = [
    "__version__",
    "FieldSpec",
    "FieldElement",
    "prime_field",
    "build_extension",
    "RingElement",
    "Factorization",
    "factor_xp_minus_1",
    "zeros_count",
    "ideal_dim",
    "IdealDescriptor",
    "BudgetExceeded",
    "enumerate_ideals",
    "ideal_from_generator",
    "ideals_in_dim_range",
    "CyclicCode",
    "DistanceResult",
    "min_distance_exact",
    "min_distance_upper",
    "quadratic_residue_code",
    "MuReport",
    "mu_bruteforce",
    "mu_via_ideals",
]
