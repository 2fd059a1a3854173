"""Minimal polynomials and division-free Berlekamp-Massey synthesis for finite
sequences over integral domains."""

from .bm import bm_synthesize, is_reciprocal_pair, pair_to_min_poly
from .domain import Integers, OpCounter, PrimeField, parse_domain
from .errors import (
    BudgetExceededError,
    DomainError,
    DomainMismatchError,
    InvariantError,
    RejectedInputError,
    UnsupportedOperationError,
)
from .laurent import Poly, Seq, is_annihilator, laurent_coeff, poly_part, reciprocal
from .synthesis import (
    discrepancy,
    index_fn,
    jump_points,
    lc_profile,
    min_poly,
    min_poly_recursive,
    min_poly_step,
    minimal_family_member,
)

__version__ = "0.1.0"
