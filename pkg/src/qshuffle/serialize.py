"""JSON encodings for words, coefficients, tensor expressions and bases.

Coefficients are told apart by shape: an integer, a ``"p/q"`` string for a
rational, a list of ``{coeff, monomial}`` objects for a ``q[x,y]`` polynomial,
an ``{exponent: coeff}`` object for a Laurent polynomial, and
``{"num": ..., "den": ...}`` for a rational function.
"""

from __future__ import annotations

from fractions import Fraction

from .bases import BasisMatrix, LyndonExpansion
from .coefficients import LaurentPolynomial, QMonomial, QPolynomial, RationalFunction
from .tensor import TensorExpr
from .words import ContentVector, PrimeFactorization, Word


def word_to_json(w) -> list[int]:
    return list(w)


def word_from_json(data) -> Word:
    return Word(int(x) for x in data)


def content_to_json(u: ContentVector) -> dict[str, int]:
    return {str(x): n for x, n in u.counts}


def content_from_json(data) -> ContentVector:
    return ContentVector.from_mapping({int(k): int(v) for k, v in data.items()})


def factorization_to_json(f: PrimeFactorization) -> list[dict]:
    return [{"prime": list(p), "multiplicity": n} for p, n in f.factors]


def laurent_to_json(p: LaurentPolynomial) -> dict[str, int]:
    return {str(e): c for e, c in p.items()}


def laurent_from_json(data) -> LaurentPolynomial:
    return LaurentPolynomial({int(e): int(c) for e, c in data.items()})


def coeff_to_json(c):
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    if isinstance(c, QPolynomial):
        return [
            {"coeff": k, "monomial": [[x, y, e] for (x, y), e in mono]} for mono, k in c.items()
        ]
    if isinstance(c, LaurentPolynomial):
        return laurent_to_json(c)
    if isinstance(c, RationalFunction):
        return {"num": laurent_to_json(c.num), "den": laurent_to_json(c.den)}
    raise TypeError(f"cannot serialize coefficient of type {type(c).__name__}")


def coeff_from_json(data):
    if isinstance(data, int):
        return data
    if isinstance(data, str):
        return Fraction(data)
    if isinstance(data, list):
        return QPolynomial(
            {QMonomial(((x, y), e) for x, y, e in term["monomial"]): term["coeff"] for term in data}
        )
    if isinstance(data, dict):
        if "num" in data:
            return RationalFunction(laurent_from_json(data["num"]), laurent_from_json(data["den"]))
        return laurent_from_json(data)
    raise TypeError(f"unrecognized coefficient encoding {data!r}")


def tensor_to_json(expr: TensorExpr) -> list[dict]:
    return [{"word": list(w), "coeff": coeff_to_json(c)} for w, c in expr.items()]


def tensor_from_json(data) -> TensorExpr:
    return TensorExpr((word_from_json(t["word"]), coeff_from_json(t["coeff"])) for t in data)


def expansion_to_json(e: LyndonExpansion) -> dict:
    return {
        "target": list(e.target),
        "terms": [{"word": list(w), "coeff": coeff_to_json(c)} for w, c in e.items()],
    }


def expansion_from_json(data) -> LyndonExpansion:
    return LyndonExpansion(
        word_from_json(data["target"]),
        {word_from_json(t["word"]): coeff_from_json(t["coeff"]) for t in data["terms"]},
    )


def matrix_to_json(m: BasisMatrix) -> dict:
    return {
        "words": [list(w) for w in m.words],
        "rows": [[coeff_to_json(c) for c in row] for row in m.rows],
    }


def matrix_from_json(data) -> BasisMatrix:
    return BasisMatrix(
        tuple(word_from_json(w) for w in data["words"]),
        tuple(tuple(coeff_from_json(c) for c in row) for row in data["rows"]),
    )
