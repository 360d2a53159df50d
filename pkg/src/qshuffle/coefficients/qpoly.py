"""Integer polynomials in commuting indeterminates ``q[x,y]``, one per letter pair."""

from __future__ import annotations

from typing import Iterable, Mapping

__all__ = ["QMonomial", "QPolynomial"]


class QMonomial(tuple):
    """Sorted tuple of ``((x, y), exponent)`` with nonzero exponents; ``()`` is 1."""

    __slots__ = ()

    def __new__(cls, exponents: Mapping[tuple[int, int], int] | Iterable = ()):
        if isinstance(exponents, Mapping):
            exponents = exponents.items()
        merged: dict[tuple[int, int], int] = {}
        for (x, y), e in exponents:
            key = (int(x), int(y))
            merged[key] = merged.get(key, 0) + int(e)
        return tuple.__new__(cls, sorted((k, e) for k, e in merged.items() if e))

    @classmethod
    def _raw(cls, items) -> "QMonomial":
        return tuple.__new__(cls, items)

    @property
    def exponents(self) -> dict[tuple[int, int], int]:
        return dict(self)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self)

    def __mul__(self, other: "QMonomial") -> "QMonomial":
        if not other:
            return self
        if not self:
            return other
        merged = dict(self)
        for k, e in other:
            s = merged.get(k, 0) + e
            if s:
                merged[k] = s
            else:
                del merged[k]
        return QMonomial._raw(sorted(merged.items()))

    def __str__(self):
        if not self:
            return "1"
        return "*".join(
            f"q[{x},{y}]" if e == 1 else f"q[{x},{y}]^{e}" for (x, y), e in self
        )

    def latex(self) -> str:
        return " ".join(
            f"q_{{{x},{y}}}" if e == 1 else f"q_{{{x},{y}}}^{{{e}}}" for (x, y), e in self
        )

    def __repr__(self):
        return f"QMonomial({dict(self)!r})"


_ONE = QMonomial()


def _sort_key(mono: QMonomial):
    return (mono.degree, tuple(mono))


class QPolynomial:
    """Immutable map QMonomial -> nonzero integer."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[QMonomial, int] | int = 0):
        if isinstance(terms, int):
            terms = {_ONE: terms}
        out: dict[QMonomial, int] = {}
        for mono, c in terms.items():
            if not isinstance(mono, QMonomial):
                mono = QMonomial(mono)
            out[mono] = out.get(mono, 0) + int(c)
        self._t = {m: c for m, c in out.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "QPolynomial":
        obj = cls.__new__(cls)
        obj._t = terms
        obj._hash = None
        return obj

    @classmethod
    def gen(cls, x: int, y: int, exponent: int = 1) -> "QPolynomial":
        """The indeterminate ``q[x,y]`` raised to ``exponent``."""
        return cls._raw({QMonomial._raw((((x, y), exponent),)): 1})

    @classmethod
    def from_monomial(cls, mono: QMonomial, coeff: int = 1) -> "QPolynomial":
        return cls._raw({mono: coeff} if coeff else {})

    @property
    def terms(self) -> dict[QMonomial, int]:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items(), key=lambda mc: _sort_key(mc[0]))

    def is_constant(self) -> bool:
        return not self._t or set(self._t) == {_ONE}

    def constant_value(self) -> int:
        return self._t.get(_ONE, 0)

    def indeterminates(self) -> set[tuple[int, int]]:
        return {k for mono in self._t for k, _ in mono}

    @staticmethod
    def _coerce(other):
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial._raw({_ONE: other} if other else {})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._t)
        for m, c in other._t.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return QPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial._raw({m: -c for m, c in self._t.items()})

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
        out: dict[QMonomial, int] = {}
        for m1, c1 in self._t.items():
            for m2, c2 in other._t.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return QPolynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ArithmeticError("negative powers are not polynomials")
        result = QPolynomial._raw({_ONE: 1})
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    def _render(self, mono_fmt, sep):
        if not self._t:
            return "0"
        out = ""
        for i, (m, c) in enumerate(self.items()):
            if not m:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono_fmt(m)
            else:
                body = f"{abs(c)}{sep}{mono_fmt(m)}"
            if i == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __str__(self):
        return self._render(str, "*")

    def latex(self) -> str:
        return self._render(QMonomial.latex, " ")

    def __repr__(self):
        return f"QPolynomial({str(self)!r})"
