"""Univariate Laurent polynomials in ``q`` with integer coefficients.

Also holds the dense integer-polynomial helpers (lists, lowest degree first)
that the rational-function field and the cyclotomic test are built on.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Mapping

__all__ = [
    "LaurentPolynomial",
    "cyclotomic",
    "vanishes_at_root_of_unity",
]


# -- dense integer polynomials ------------------------------------------------

def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _content(p: list[int]) -> int:
    return functools.reduce(math.gcd, p, 0)


def _primitive(p: list[int]) -> list[int]:
    c = _content(p)
    if c == 0:
        return []
    if p[-1] < 0:
        c = -c
    return [x // c for x in p]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of ``a`` by ``b`` over the integers."""
    a = list(a)
    lb, db = b[-1], len(b) - 1
    while len(a) - 1 >= db and a:
        la, shift = a[-1], len(a) - 1 - db
        a = [lb * x for x in a]
        for i, y in enumerate(b):
            a[i + shift] -= la * y
        _trim(a)
    return a


def _pgcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd with positive leading coefficient (the gcd over Q, scaled)."""
    a, b = _primitive(list(a)), _primitive(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive(_prem(a, b))
    return a


def _pdiv_exact(a: list[int], b: list[int]) -> list[int]:
    """Quotient ``a / b`` over the integers; raises if the division is not exact."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    if len(a) - 1 < db:
        if a:
            raise ArithmeticError("polynomial division is not exact")
        return []
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c, r = divmod(a[k + db], lb)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        quot[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] -= c * y
    if any(a):
        raise ArithmeticError("polynomial division is not exact")
    return quot


def _prem_monic(a: list[int], m: list[int]) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    a = list(a)
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k]
        if c:
            for i, y in enumerate(m):
                a[k - dm + i] -= c * y
    return _trim(a[:dm])


# -- Laurent polynomials -------------------------------------------------------

class LaurentPolynomial:
    """Immutable map exponent -> nonzero integer coefficient."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | int = 0):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._c = {int(e): int(c) for e, c in coeffs.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: dict) -> "LaurentPolynomial":
        obj = cls.__new__(cls)
        obj._c = coeffs
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def q(cls) -> "LaurentPolynomial":
        return cls._raw({1: 1})

    @classmethod
    def from_dense(cls, valuation: int, coeffs: list[int]) -> "LaurentPolynomial":
        return cls._raw({valuation + i: c for i, c in enumerate(coeffs) if c})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    @property
    def valuation(self) -> int:
        return min(self._c) if self._c else 0

    @property
    def degree(self) -> int:
        return max(self._c) if self._c else 0

    def to_dense(self) -> tuple[int, list[int]]:
        """``(valuation, [c_v, c_{v+1}, ...])``; the zero polynomial is ``(0, [])``."""
        if not self._c:
            return 0, []
        v = self.valuation
        out = [0] * (self.degree - v + 1)
        for e, c in self._c.items():
            out[e - v] = c
        return v, out

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def constant_value(self) -> int:
        return self._c.get(0, 0)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    # arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial._raw({0: other} if other else {})
        if isinstance(other, Fraction) and other.denominator == 1:
            return LaurentPolynomial._raw({0: other.numerator} if other else {})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._c)
        for e, c in other._c.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial() or abs(next(iter(self._c.values()))) != 1:
                raise ArithmeticError("only unit monomials have Laurent inverses")
            (e, c), = self._c.items()
            return LaurentPolynomial._raw({e * n: c ** (-n)})
        result = LaurentPolynomial._raw({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Quotient in Z[q, 1/q]; raises ``ArithmeticError`` if it does not exist."""
        other = self._coerce(other)
        if not other._c:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._c:
            return LaurentPolynomial()
        va, a = self.to_dense()
        vb, b = other.to_dense()
        return LaurentPolynomial.from_dense(va - vb, _pdiv_exact(a, b))

    def evaluate(self, x):
        """Substitute a number for ``q`` (ints, Fractions, floats or complex)."""
        total = 0
        for e, c in self._c.items():
            total += c * (x ** e if e >= 0 else 1 / x ** (-e))
        return total

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    # display

    def _terms(self, fmt):
        parts = []
        for e, c in self.items():
            if e == 0:
                body = str(abs(c))
            else:
                mono = fmt(e)
                body = mono if abs(c) == 1 else f"{abs(c)}{'*' if fmt is _plain_power else ''}{mono}"
            parts.append((c < 0, body))
        return parts

    def __str__(self):
        return _join_signed(self._terms(_plain_power))

    def latex(self) -> str:
        return _join_signed(self._terms(_latex_power))

    def __repr__(self):
        return f"LaurentPolynomial({self.items()!r})"


def _plain_power(e):
    return "q" if e == 1 else f"q^{e}"


def _latex_power(e):
    return "q" if e == 1 else f"q^{{{e}}}"


def _join_signed(parts) -> str:
    if not parts:
        return "0"
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


# -- roots of unity -------------------------------------------------------------

@functools.lru_cache(maxsize=64)
def _cyclotomic_dense(n: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _pdiv_exact(poly, list(_cyclotomic_dense(d)))
    return tuple(poly)


def cyclotomic(n: int) -> LaurentPolynomial:
    """The n-th cyclotomic polynomial, from ``q^n - 1 = prod_{d | n} Phi_d``."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    return LaurentPolynomial.from_dense(0, list(_cyclotomic_dense(n)))


def vanishes_at_root_of_unity(p: LaurentPolynomial, l: int) -> bool:
    """True iff ``p`` vanishes at a (hence every) primitive ``l``-th root of unity."""
    if l < 2:
        raise ValueError("root-of-unity order must be at least 2")
    if isinstance(p, int):
        p = LaurentPolynomial(p)
    _, dense = p.to_dense()
    return not _prem_monic(dense, list(_cyclotomic_dense(l)))
