"""Quantum shuffle products and Lyndon-word bases with exact arithmetic."""

from .bases import (
    BasisMatrix,
    LyndonExpansion,
    alpha_leading,
    basis_matrix,
    check_root_degeneracy,
    express_in_lyndon_basis,
    lyndon_expansions,
    serre_element,
    x_of,
)
from .braiding import (
    Braiding,
    ClassicalBraiding,
    SpecializedBraiding,
    SymbolicBraiding,
    TableBraiding,
    braiding_coefficient_pair,
)
from .coefficients import (
    LaurentPolynomial,
    QMonomial,
    QPolynomial,
    RationalFunction,
    Specialization,
    field_div,
    mahonian_factorial,
    specialize,
    symmetric_q_factorial,
    vanishes_at_root_of_unity,
)
from .errors import (
    BraidingError,
    DegenerateBasisError,
    InvariantViolation,
    QShuffleError,
    TermLimitExceeded,
    WordError,
)
from .shuffle import (
    ShufflePermutation,
    lift_coefficient,
    shuffle_permutations,
    shuffle_product,
    shuffle_product_many,
)
from .tensor import TensorExpr
from .words import (
    EMPTY,
    ContentVector,
    PrimeFactorization,
    Word,
    compare_words,
    content,
    enumerate_primes,
    enumerate_words,
    first_prime,
    is_prime,
    prime_factorization,
)

__version__ = "0.1.0"
