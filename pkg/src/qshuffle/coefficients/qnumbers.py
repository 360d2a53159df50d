"""q-factorials and q-binomials in expanded (division-free) form."""

from __future__ import annotations

from .laurent import LaurentPolynomial

__all__ = ["mahonian_factorial", "symmetric_q_factorial", "symmetric_q_binomial"]


def _one_like(x):
    return x * 0 + 1


def mahonian_factorial(n: int, Q):
    """``prod_{j=1}^{n} (1 + Q + ... + Q^{j-1})`` in the ring of ``Q``.

    The product of geometric sums is never divided out, so the value stays
    correct at ``Q = 1`` (where it is ``n!``) and at roots of unity.
    """
    if n < 0:
        raise ValueError("factorial of a negative integer")
    one = _one_like(Q)
    result = one
    for j in range(2, n + 1):
        term, power = one, one
        for _ in range(j - 1):
            power = power * Q
            term = term + power
        result = result * term
    return result


def symmetric_q_factorial(n: int, d: int = 1) -> LaurentPolynomial:
    """``prod_{i=1}^{n} sum_{m in {-i+1, -i+3, ..., i-1}} q_i^m`` with ``q_i = q^d``."""
    if n < 0:
        raise ValueError("factorial of a negative integer")
    result = LaurentPolynomial(1)
    for i in range(2, n + 1):
        result = result * LaurentPolynomial({d * m: 1 for m in range(-i + 1, i, 2)})
    return result


def symmetric_q_binomial(m: int, k: int, d: int = 1) -> LaurentPolynomial:
    """``[m]! / ([m-k]! [k]!)`` in the symmetric convention; exact in Z[q, 1/q]."""
    if not 0 <= k <= m:
        return LaurentPolynomial()
    denom = symmetric_q_factorial(m - k, d) * symmetric_q_factorial(k, d)
    return symmetric_q_factorial(m, d).exact_div(denom)
