"""Exact computations for the integral Chow ring of moduli of minimal Weierstrass fibrations."""

from .classes import TotalClass, chern_gl2_sym, chern_pgl2_V, chern_sl2gm_V, segre
from .delta_one import DeltaOneResult, delta1, delta1_even, delta1_even_crosscheck, delta1_odd
from .delta_two import RelationRecord, c_coefficient, relation, relation_f, relation_g_even_k, relation_g_odd_k
from .errors import WchowError
from .ideal import graded_membership, hermite_solve, ideal_equal, minimal_generators
from .presentation import Presentation, emit, present, verify_closed_forms
from .pushforward import e_coeff, push_even, push_odd
from .ring import GradedPolynomial, RingSpec, format_polynomial, parse_polynomial

__version__ = "0.1.0"

__all__ = [
    "DeltaOneResult",
    "GradedPolynomial",
    "Presentation",
    "RelationRecord",
    "RingSpec",
    "TotalClass",
    "WchowError",
    "c_coefficient",
    "chern_gl2_sym",
    "chern_pgl2_V",
    "chern_sl2gm_V",
    "delta1",
    "delta1_even",
    "delta1_even_crosscheck",
    "delta1_odd",
    "e_coeff",
    "emit",
    "format_polynomial",
    "graded_membership",
    "hermite_solve",
    "ideal_equal",
    "minimal_generators",
    "parse_polynomial",
    "present",
    "push_even",
    "push_odd",
    "relation",
    "relation_f",
    "relation_g_even_k",
    "relation_g_odd_k",
    "segre",
    "verify_closed_forms",
]
