"""Diagonal braidings ``sigma(e_x (x) e_y) = q_xy e_y (x) e_x``.

A braiding only has to answer one question: which scalar is picked up when a
set of letter crossings happens.  Each class below answers it in its own
coefficient ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .coefficients import (
    LaurentPolynomial,
    QMonomial,
    QPolynomial,
    Specialization,
    default_letter_index,
    to_field,
)
from .errors import BraidingError

__all__ = [
    "Braiding",
    "SymbolicBraiding",
    "ClassicalBraiding",
    "SpecializedBraiding",
    "TableBraiding",
    "braiding_coefficient_pair",
]


class Braiding:
    """Base class; subclasses define :meth:`pair` and :meth:`one`."""

    kind = "abstract"

    def pair(self, x: int, y: int):
        """Scalar ``q_xy`` picked up when ``x`` crosses left-to-right over ``y``."""
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def crossing(self, pairs: Mapping[tuple[int, int], int]):
        """Product of ``pair(x, y) ** n`` over ``pairs``."""
        result = self.one()
        for (x, y), n in pairs.items():
            c = self.pair(x, y)
            for _ in range(n):
                result = result * c
        return result

    def to_field(self, c):
        """Embed a coefficient of this braiding's ring into a field."""
        return to_field(c)

    @property
    def has_field(self) -> bool:
        return True

    @property
    def cartan_spec(self) -> Specialization | None:
        return None

    # convenience constructors

    @staticmethod
    def symbolic() -> "SymbolicBraiding":
        return SymbolicBraiding()

    @staticmethod
    def classical() -> "ClassicalBraiding":
        return ClassicalBraiding()

    @staticmethod
    def cartan(cartan, d=None, letters=None) -> "SpecializedBraiding":
        """Cartan braiding ``q_ij = q^(d_i a_ij)``; ``cartan`` may be a type name like ``"A2"``."""
        return SpecializedBraiding(Specialization.from_cartan(cartan, d), _letter_index(letters))

    @staticmethod
    def numeric(q, cartan, d=None, letters=None) -> "SpecializedBraiding":
        return SpecializedBraiding(Specialization.numeric(q, cartan, d), _letter_index(letters))

    @staticmethod
    def table(entries: Mapping[tuple[int, int], object]) -> "TableBraiding":
        return TableBraiding(entries)


def _letter_index(letters):
    if letters is None:
        return None
    if isinstance(letters, Mapping):
        return {int(k): int(v) for k, v in letters.items()}
    return {int(x): i for i, x in enumerate(letters)}


@dataclass(frozen=True)
class SymbolicBraiding(Braiding):
    """Every ``q_xy`` stays an independent indeterminate."""

    kind = "symbolic"

    def pair(self, x, y):
        return QPolynomial.gen(x, y)

    def one(self):
        return QPolynomial(1)

    def crossing(self, pairs):
        return QPolynomial.from_monomial(QMonomial._raw(sorted((k, n) for k, n in pairs.items() if n)))

    @property
    def has_field(self):
        return False

    def to_field(self, c):
        raise TypeError("symbolic braiding has no coefficient field; specialize first")


@dataclass(frozen=True)
class ClassicalBraiding(Braiding):
    """Trivial braiding: plain transposition, all ``q_xy = 1``."""

    kind = "classical"

    def pair(self, x, y):
        return 1

    def one(self):
        return 1

    def crossing(self, pairs):
        return 1


@dataclass(frozen=True)
class SpecializedBraiding(Braiding):
    """Braiding obtained by specializing ``q_xy`` (Cartan, numeric or exponent table)."""

    spec: Specialization
    letter_index: Mapping[int, int] | None = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        if self.spec.kind == "classical":
            raise BraidingError("use ClassicalBraiding for the classical specialization")
        if self.letter_index is None and self.spec.cartan is not None:
            object.__setattr__(self, "letter_index", default_letter_index(self.spec.rank))
        if self.letter_index is not None:
            for letter, row in self.letter_index.items():
                if self.spec.cartan is not None and not 0 <= row < self.spec.rank:
                    raise BraidingError(f"letter {letter} mapped to missing Cartan row {row}")
        object.__setattr__(self, "_exponents", {})

    @property
    def kind(self):
        return self.spec.kind

    @property
    def cartan_spec(self):
        return self.spec if self.spec.cartan is not None else None

    def exponent(self, x, y) -> int:
        cache = self._exponents
        key = (x, y)
        if key not in cache:
            cache[key] = self.spec.pair_exponent(x, y, self.letter_index)
        return cache[key]

    def pair(self, x, y):
        return self.spec.power(self.exponent(x, y))

    def one(self):
        return self.spec.one()

    def crossing(self, pairs):
        return self.spec.power(sum(n * self.exponent(x, y) for (x, y), n in pairs.items()))


@dataclass(frozen=True)
class TableBraiding(Braiding):
    """Explicit table ``(x, y) -> q_xy`` with int, Fraction or Laurent entries."""

    entries: Mapping[tuple[int, int], object] = field(compare=False, hash=False)

    kind = "table"

    def __post_init__(self):
        table = {(int(x), int(y)): v for (x, y), v in self.entries.items()}
        if not table:
            raise BraidingError("braiding table is empty")
        if any(isinstance(v, LaurentPolynomial) for v in table.values()):
            table = {k: v if isinstance(v, LaurentPolynomial) else LaurentPolynomial(_as_int(v))
                     for k, v in table.items()}
            one = LaurentPolynomial(1)
        elif any(isinstance(v, Fraction) for v in table.values()):
            table = {k: Fraction(v) for k, v in table.items()}
            one = Fraction(1)
        else:
            one = 1
        object.__setattr__(self, "entries", table)
        object.__setattr__(self, "_one", one)

    def pair(self, x, y):
        try:
            return self.entries[(x, y)]
        except KeyError:
            raise BraidingError(f"braiding undefined for the letter pair ({x},{y})") from None

    def one(self):
        return self._one


def _as_int(v):
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise BraidingError("cannot mix non-integer rationals with Laurent table entries")
        return v.numerator
    return int(v)


def braiding_coefficient_pair(x: int, y: int, braiding: Braiding):
    return braiding.pair(x, y)
