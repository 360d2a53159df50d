"""Lyndon-word bases ``X_a`` of the graded pieces of the tensor space.

``X_a`` is the shuffle product of the primes of ``a`` (with multiplicity, in
ascending order).  Over a grading class ``S(u)`` the transition from the words
``v_b`` to the ``X_a`` is triangular: ``X_a`` only involves words ``b >= a``,
with leading coefficient a product of Mahonian q-factorials.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .braiding import Braiding
from .coefficients import (
    LaurentPolynomial,
    mahonian_factorial,
    symmetric_q_binomial,
    vanishes_at_root_of_unity,
)
from .errors import BraidingError, DegenerateBasisError, InvariantViolation, WordError
from .shuffle import DEFAULT_MAX_TERMS, _resolve_workers, shuffle_product_many
from .tensor import TensorExpr
from .words import ContentVector, Word, content, enumerate_words, prime_factorization

__all__ = [
    "BasisMatrix",
    "LyndonExpansion",
    "x_of",
    "alpha_leading",
    "basis_matrix",
    "express_in_lyndon_basis",
    "lyndon_expansions",
    "serre_element",
    "check_root_degeneracy",
]


def x_of(a: Iterable[int], braiding: Braiding, *, max_terms=DEFAULT_MAX_TERMS, workers=1) -> TensorExpr:
    """``X_a``: the shuffle product of the primes of ``a`` in ascending order."""
    primes = prime_factorization(a).primes()
    return shuffle_product_many(
        [TensorExpr.basis(p) for p in primes], braiding, max_terms=max_terms, workers=workers
    )


def block_swap_coefficient(p: Word, braiding: Braiding):
    """``Q = prod_{k,l} q_{x_k x_l}``: the scalar from moving one copy of ``p`` past another."""
    return braiding.crossing(Counter((x, y) for x in p for y in p))


def alpha_leading(a: Iterable[int], braiding: Braiding):
    """Coefficient of ``v_a`` in ``X_a``, from the product of Mahonian factorials."""
    result = braiding.one()
    for p, n in prime_factorization(a):
        result = result * mahonian_factorial(n, block_swap_coefficient(p, braiding))
    return result


@dataclass(frozen=True)
class BasisMatrix:
    """Row ``i`` holds the coefficients of ``X_{words[i]}`` on each ``v_{words[j]}``.

    ``words`` is in descending order, so the nonzero entries of a row sit at
    columns ``j <= i`` (words greater than or equal to the row's word).
    """

    words: tuple
    rows: tuple

    def index(self, word) -> int:
        return self.words.index(Word(word))

    def entry(self, a, b):
        return self.rows[self.index(a)][self.index(b)]

    def diagonal(self) -> list:
        return [self.rows[i][i] for i in range(len(self.words))]

    def determinant(self):
        det = 1
        for d in self.diagonal():
            det = d * det
        return det

    def is_triangular(self) -> bool:
        return all(
            not self.rows[i][j] for i in range(len(self.words)) for j in range(i + 1, len(self.words))
        )

    def __len__(self):
        return len(self.words)


def _row(args):
    a, words, braiding, max_terms = args
    x = x_of(a, braiding, max_terms=max_terms)
    allowed = set(words)
    stray = [w for w in x.terms if w not in allowed]
    if stray:
        raise InvariantViolation(f"X_{a} has words outside its grading class: {stray[:3]}")
    zero = braiding.one() * 0
    return tuple(x.terms.get(b, zero) for b in words)


def basis_matrix(u, braiding: Braiding, *, max_terms=DEFAULT_MAX_TERMS, workers=1) -> BasisMatrix:
    """Transition matrix from ``{v_b}`` to ``{X_a}`` over ``S(u)``."""
    if not isinstance(u, ContentVector):
        u = ContentVector.from_mapping(u)
    words = tuple(enumerate_words(u))
    jobs = [(a, words, braiding, max_terms) for a in words]
    workers = _resolve_workers(workers)
    if workers > 1 and len(words) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = tuple(pool.map(_row, jobs))
    else:
        rows = tuple(_row(job) for job in jobs)
    return BasisMatrix(words, rows)


@dataclass(frozen=True)
class LyndonExpansion:
    """``v_target = sum_c combination[c] * X_c``."""

    target: Word
    combination: dict

    def items(self) -> list[tuple[Word, object]]:
        return sorted(self.combination.items(), key=lambda wc: wc[0])

    def reconstruct(self, braiding: Braiding) -> TensorExpr:
        """Substitute each ``X_c`` back; equals ``v_target`` when the expansion is right."""
        total = TensorExpr()
        for c, beta in self.combination.items():
            total = total + x_of(c, braiding).map_coefficients(braiding.to_field).scale(beta)
        return total


def _field_matrix(matrix: BasisMatrix, braiding: Braiding):
    return [[braiding.to_field(c) for c in row] for row in matrix.rows]


def _solve_column(matrix: BasisMatrix, field_rows, target_index: int) -> dict:
    """Solve ``sum_i beta_i M[i][j] = delta(j, target)`` by back-substitution."""
    words = matrix.words
    beta: dict[int, object] = {}
    for j in range(target_index, -1, -1):
        acc = 1 if j == target_index else 0
        for i, b in beta.items():
            m = field_rows[i][j]
            if m:
                acc = acc - b * m
        if not acc:
            continue
        diag = field_rows[j][j]
        if not diag:
            raise DegenerateBasisError(
                f"basis degenerate at this specialization: alpha_cc = 0 for word c = {words[j]}",
                word=words[j],
            )
        beta[j] = acc / diag
    return {words[i]: b for i, b in beta.items() if b}


def _check_field(braiding: Braiding):
    if not braiding.has_field:
        raise BraidingError(
            "expressing v_a in the X basis needs field coefficients; "
            "use a classical, Cartan or numeric braiding"
        )


def _verify(expansion: LyndonExpansion, matrix: BasisMatrix, field_rows):
    index = {w: i for i, w in enumerate(matrix.words)}
    total = {}
    for c, beta in expansion.combination.items():
        for j, m in enumerate(field_rows[index[c]]):
            if m:
                total[j] = total.get(j, 0) + beta * m
    target = index[expansion.target]
    for j in range(len(matrix.words)):
        expected = 1 if j == target else 0
        if total.get(j, 0) != expected:
            raise InvariantViolation(
                f"expansion of v_{expansion.target} does not reproduce it at word {matrix.words[j]}"
            )


def _require_diagonal(matrix: BasisMatrix, field_rows, upto: int):
    for j in range(upto + 1):
        if not field_rows[j][j]:
            w = matrix.words[j]
            raise DegenerateBasisError(
                f"basis degenerate at this specialization: alpha_cc = 0 for word c = {w}", word=w
            )


def express_in_lyndon_basis(
    a: Iterable[int], braiding: Braiding, *, matrix: BasisMatrix | None = None, **kwargs
) -> LyndonExpansion:
    """Write ``v_a`` as a combination of ``X_c`` with ``c >= a``."""
    _check_field(braiding)
    a = Word(a)
    if not a:
        raise WordError("cannot expand the empty word")
    if matrix is None:
        matrix = basis_matrix(content(a), braiding, **kwargs)
    field_rows = _field_matrix(matrix, braiding)
    target = matrix.words.index(a)
    _require_diagonal(matrix, field_rows, target)
    expansion = LyndonExpansion(a, _solve_column(matrix, field_rows, target))
    _verify(expansion, matrix, field_rows)
    return expansion


def lyndon_expansions(u, braiding: Braiding, **kwargs) -> dict[Word, LyndonExpansion]:
    """Expansions of every ``v_a`` with ``a`` in ``S(u)``, sharing one basis matrix."""
    _check_field(braiding)
    matrix = basis_matrix(u, braiding, **kwargs)
    field_rows = _field_matrix(matrix, braiding)
    _require_diagonal(matrix, field_rows, len(matrix.words) - 1)
    result = {}
    for target, a in enumerate(matrix.words):
        expansion = LyndonExpansion(a, _solve_column(matrix, field_rows, target))
        _verify(expansion, matrix, field_rows)
        result[a] = expansion
    return result


def _cartan_data(braiding: Braiding):
    spec = braiding.cartan_spec
    if spec is None:
        raise BraidingError("this operation needs a Cartan (or numeric Cartan) braiding")
    return spec, braiding.letter_index


def serre_coefficients(i: int, j: int, braiding: Braiding) -> list:
    """``(-1)^n [m choose n]_{q_i}`` for ``n = 0..m``, ``m = 1 - a_ij``, symmetric convention."""
    spec, index = _cartan_data(braiding)
    try:
        ri, rj = index[i], index[j]
    except KeyError as exc:
        raise BraidingError(f"letter {exc.args[0]} is not mapped to a Cartan row") from None
    m = 1 - spec.cartan[ri][rj]
    di = spec.d[ri]
    coeffs = []
    for n in range(m + 1):
        c = symmetric_q_binomial(m, n, di) * (-1) ** n
        if spec.kind == "numeric":
            c = Fraction(c.evaluate(spec.q))
        coeffs.append(c)
    return coeffs


def serre_element(i: int, j: int, braiding: Braiding, coefficients: Sequence | None = None) -> TensorExpr:
    """``sum_n c_n e_i^n e_j e_i^(m-n)`` evaluated with the shuffle product.

    With the default q-Serre coefficients this vanishes in the quantum
    symmetric algebra; other ``coefficients`` can be supplied to probe it.
    """
    if i == j:
        raise WordError("Serre element needs two distinct letters")
    if coefficients is None:
        coefficients = serre_coefficients(i, j, braiding)
    else:
        _cartan_data(braiding)
    m = len(coefficients) - 1
    ei, ej = TensorExpr.basis(Word([i])), TensorExpr.basis(Word([j]))
    total = TensorExpr()
    for n, c in enumerate(coefficients):
        monomial = shuffle_product_many([ei] * n + [ej] + [ei] * (m - n), braiding)
        total = total + monomial.scale(c)
    return total


def check_root_degeneracy(u, braiding: Braiding, l: int) -> list[tuple[Word, bool]]:
    """For each ``a`` in ``S(u)``: does ``alpha_aa`` vanish at a primitive ``l``-th root of unity?"""
    spec, _ = _cartan_data(braiding)
    if spec.kind != "cartan":
        raise BraidingError("root-of-unity checks need the symbolic-q Cartan braiding")
    if l < 2:
        raise ValueError("root-of-unity order must be at least 2")
    result = []
    for a in enumerate_words(u):
        alpha = alpha_leading(a, braiding)
        if not isinstance(alpha, LaurentPolynomial):
            alpha = LaurentPolynomial(int(alpha))
        result.append((a, vanishes_at_root_of_unity(alpha, l)))
    return result
