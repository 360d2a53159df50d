"""Coefficient fields for triangular solves: rationals and rational functions in q."""

from __future__ import annotations

import math
from fractions import Fraction

from .laurent import LaurentPolynomial, _content, _pdiv_exact, _pgcd
from .qpoly import QPolynomial

__all__ = ["RationalFunction", "field_div", "to_field"]


class RationalFunction:
    """Reduced quotient ``num / den`` of Laurent polynomials in ``q``.

    Canonical form: ``den`` is an ordinary polynomial with nonzero constant
    term, the constant term is positive, ``gcd(num, den) = 1`` over Q, and the
    integer coefficients of ``num`` and ``den`` share no common factor.  Two
    equal rational functions therefore have identical representations.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = _as_laurent(num)
        den = _as_laurent(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    def is_laurent(self) -> bool:
        return self.den.is_constant() and self.den.constant_value() == 1

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, LaurentPolynomial)):
            return RationalFunction._raw(_as_laurent(other), LaurentPolynomial(1))
        if isinstance(other, Fraction):
            return RationalFunction(other.numerator, other.denominator)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

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
        if not self.num or not other.num:
            return RationalFunction()
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def evaluate(self, x):
        return self.num.evaluate(x) / self.den.evaluate(x)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.num) if self.is_laurent() else hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        num = str(self.num)
        if len(self.num.coeffs) > 1:
            num = f"({num})"
        return f"{num}/({self.den})"

    def latex(self) -> str:
        if self.is_laurent():
            return self.num.latex()
        return rf"\frac{{{self.num.latex()}}}{{{self.den.latex()}}}"

    def __repr__(self):
        return f"RationalFunction({self})"


def _as_laurent(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return LaurentPolynomial(x.numerator)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


def _normalize(num: LaurentPolynomial, den: LaurentPolynomial):
    if not num:
        return LaurentPolynomial(), LaurentPolynomial(1)
    vn, n = num.to_dense()
    vd, d = den.to_dense()
    shift = vn - vd
    if len(d) > 1:
        g = _pgcd(n, d)
        if len(g) > 1:
            n = _pdiv_exact(n, g)
            d = _pdiv_exact(d, g)
    c = math.gcd(_content(n), _content(d))
    if d[0] < 0:
        c = -c
    n = [x // c for x in n]
    d = [x // c for x in d]
    return LaurentPolynomial.from_dense(shift, n), LaurentPolynomial.from_dense(0, d)


def to_field(x):
    """Embed a ring coefficient into its fraction field (Fraction or RationalFunction)."""
    if isinstance(x, (RationalFunction, Fraction)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, LaurentPolynomial):
        return RationalFunction._raw(x, LaurentPolynomial(1))
    if isinstance(x, QPolynomial):
        if x.is_constant():
            return Fraction(x.constant_value())
        raise TypeError("symbolic q[x,y] coefficients do not lie in a shipped field")
    raise TypeError(f"no coefficient field for {type(x).__name__}")


def field_div(a, b):
    """Exact quotient ``a / b`` in the common field of ``a`` and ``b``."""
    a, b = to_field(a), to_field(b)
    if not b:
        raise ZeroDivisionError("division by zero")
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a / b
    return RationalFunction._coerce(a) / RationalFunction._coerce(b)
