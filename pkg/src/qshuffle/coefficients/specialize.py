"""Substituting values for the braiding indeterminates ``q[x,y]``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from ..errors import BraidingError
from .laurent import LaurentPolynomial
from .qpoly import QPolynomial

__all__ = ["Specialization", "specialize", "CARTAN_TYPES", "default_letter_index"]

# Rank-2 conventions: B2 has a12 = -2, a21 = -1 with d = (1, 2), so d_i a_ij is symmetric.
CARTAN_TYPES: dict[str, tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]] = {
    "A1": (((2,),), (1,)),
    "A1xA1": (((2, 0), (0, 2)), (1, 1)),
    "A2": (((2, -1), (-1, 2)), (1, 1)),
    "B2": (((2, -2), (-1, 2)), (1, 2)),
    "G2": (((2, -3), (-1, 2)), (1, 3)),
    "A3": (((2, -1, 0), (-1, 2, -1), (0, -1, 2)), (1, 1, 1)),
}

KINDS = ("classical", "cartan", "numeric", "univariate")


def default_letter_index(rank: int) -> dict[int, int]:
    """Letters ``1..rank`` mapped to Cartan rows ``0..rank-1``."""
    return {k + 1: k for k in range(rank)}


@dataclass(frozen=True)
class Specialization:
    """How ``q[x,y]`` is evaluated.

    ``classical`` sends everything to 1.  ``cartan`` sends ``q[x,y]`` to
    ``q^(d_i a_ij)`` with ``i, j`` the rows of ``x, y``.  ``numeric`` does the
    same and then substitutes the rational value ``q``.  ``univariate`` uses a
    caller-supplied exponent table ``(x, y) -> k`` giving ``q^k``.
    """

    kind: str
    cartan: tuple | None = None
    d: tuple | None = None
    q: Fraction | None = None
    exponents: Mapping | None = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BraidingError(f"unknown specialization kind {self.kind!r}")
        if self.kind in ("cartan", "numeric"):
            _check_cartan(self.cartan, self.d)
            object.__setattr__(self, "cartan", tuple(tuple(int(v) for v in row) for row in self.cartan))
            object.__setattr__(self, "d", tuple(int(v) for v in self.d))
        if self.kind == "numeric":
            if self.q is None:
                raise BraidingError("numeric specialization needs a value for q")
            object.__setattr__(self, "q", Fraction(self.q))
            if self.q == 0:
                raise BraidingError("numeric specialization requires q != 0")
        if self.kind == "univariate":
            if self.exponents is None:
                raise BraidingError("univariate specialization needs an exponent table")
            table = {(int(x), int(y)): int(k) for (x, y), k in self.exponents.items()}
            object.__setattr__(self, "exponents", table)

    @classmethod
    def classical(cls) -> "Specialization":
        return cls("classical")

    @classmethod
    def from_cartan(cls, cartan, d=None) -> "Specialization":
        if isinstance(cartan, str):
            cartan, default_d = cartan_type(cartan)
            d = default_d if d is None else d
        if d is None:
            d = (1,) * len(cartan)
        return cls("cartan", cartan=cartan, d=d)

    @classmethod
    def numeric(cls, q, cartan, d=None) -> "Specialization":
        base = cls.from_cartan(cartan, d)
        return cls("numeric", cartan=base.cartan, d=base.d, q=Fraction(q))

    @classmethod
    def univariate(cls, exponents: Mapping) -> "Specialization":
        return cls("univariate", exponents=exponents)

    @property
    def rank(self) -> int:
        return len(self.cartan) if self.cartan is not None else 0

    def pair_exponent(self, x: int, y: int, letter_index: Mapping[int, int]) -> int:
        """Exponent ``k`` with ``q[x,y] -> q^k`` (cartan, numeric, univariate kinds)."""
        if self.kind == "univariate":
            try:
                return self.exponents[(x, y)]
            except KeyError:
                raise BraidingError(f"no exponent given for the pair ({x},{y})") from None
        try:
            i, j = letter_index[x], letter_index[y]
        except KeyError as exc:
            raise BraidingError(f"letter {exc.args[0]} is not mapped to a Cartan row") from None
        return self.d[i] * self.cartan[i][j]

    def power(self, k: int):
        """``q^k`` in the target ring of this specialization."""
        if self.kind == "classical":
            return 1
        if self.kind == "numeric":
            return self.q ** k
        return LaurentPolynomial.monomial(k)

    def one(self):
        if self.kind == "classical":
            return 1
        if self.kind == "numeric":
            return Fraction(1)
        return LaurentPolynomial(1)


def cartan_type(name: str):
    """Look up a built-in Cartan matrix and symmetrizer by name (``"A2"``, ``"b2"``...)."""
    for key, value in CARTAN_TYPES.items():
        if key.lower() == name.lower():
            return value
    raise BraidingError(f"unknown Cartan type {name!r}; known: {', '.join(CARTAN_TYPES)}")


def _check_cartan(cartan, d):
    if cartan is None or d is None:
        raise BraidingError("cartan specialization needs both a matrix and d")
    n = len(cartan)
    if n == 0 or any(len(row) != n for row in cartan):
        raise BraidingError("Cartan matrix must be square and nonempty")
    for i in range(n):
        for j in range(n):
            a = cartan[i][j]
            if i == j and a != 2:
                raise BraidingError(f"Cartan diagonal entry a[{i}][{i}] must be 2, got {a}")
            if i != j and a > 0:
                raise BraidingError(f"off-diagonal Cartan entry a[{i}][{j}] must be <= 0, got {a}")
    if len(d) != n or any(int(v) < 1 for v in d):
        raise BraidingError("d must hold one positive integer per Cartan row")


def specialize(p: QPolynomial, spec: Specialization, letter_to_index: Mapping[int, int] | None = None):
    """Evaluate ``p`` under ``spec``; the result is an int, Fraction or LaurentPolynomial."""
    if letter_to_index is None and spec.cartan is not None:
        letter_to_index = default_letter_index(spec.rank)
    if spec.kind == "classical":
        return sum(p.terms.values())
    result = spec.one() * 0
    for mono, c in p.terms.items():
        k = sum(e * spec.pair_exponent(x, y, letter_to_index) for (x, y), e in mono)
        result = result + c * spec.power(k)
    return result
