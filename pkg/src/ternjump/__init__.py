"""Jump calculus for ternary cyclotomic and inclusion-exclusion polynomials."""

__version__ = "0.1.0"

from .count import JumpComponents, bound_report, closed_J
from .modular import Triple, ext_gcd, is_prime, mod_inverse, validate_triple
from .poly import CoefficientTable, coefficients, jump_scan
from .representation import Representation, decompose, jump_from_octuple, octuple
from .zones import ZoneProfile, classify, lemma_r_status, table_octuple, table_V, zone_profile

__all__ = [
    "CoefficientTable",
    "JumpComponents",
    "Representation",
    "Triple",
    "ZoneProfile",
    "bound_report",
    "classify",
    "closed_J",
    "coefficients",
    "decompose",
    "ext_gcd",
    "is_prime",
    "jump_from_octuple",
    "jump_scan",
    "lemma_r_status",
    "mod_inverse",
    "octuple",
    "table_octuple",
    "table_V",
    "validate_triple",
    "zone_profile",
]
