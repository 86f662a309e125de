"""Exact workbench for skew polynomial rings K[t; sigma, delta] and Petit algebras S_f."""

from .errors import GuardExceeded, InfiniteDimensionalError, PreconditionError
from .ff import FqContext, fq_make, parse_field
from .funcfield import FuncField, RatFunc
from .irred import Verdict, irreducible
from .oracle import Factorization, full_factorization
from .petit import PetitAlgebra, Subspace, find_right_semi_invariant
from .skew import (
    Twist,
    format_poly,
    gcrd,
    lclm,
    left_divmod,
    parse_poly,
    right_divmod,
    skew_mul,
)

__all__ = [
    'FqContext', 'FuncField', 'GuardExceeded', 'InfiniteDimensionalError', 'PetitAlgebra',
    'Factorization', 'PreconditionError', 'RatFunc', 'Verdict', 'full_factorization', 'irreducible', 'Subspace', 'Twist', 'find_right_semi_invariant',
    'format_poly', 'fq_make', 'gcrd', 'lclm', 'left_divmod', 'parse_field', 'parse_poly',
    'right_divmod', 'skew_mul',
]
