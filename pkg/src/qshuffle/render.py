"""Plain-text and LaTeX rendering of coefficients and tensor expressions."""

from __future__ import annotations

from fractions import Fraction

from .coefficients import LaurentPolynomial, QPolynomial, RationalFunction


def coeff_text(c) -> str:
    return str(c)


def coeff_latex(c) -> str:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        sign = "-" if c < 0 else ""
        return rf"{sign}\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    if isinstance(c, int):
        return str(c)
    return c.latex()


def _is_atomic(c) -> bool:
    """True if ``c`` prints as a single signed factor (no parentheses needed)."""
    if isinstance(c, (int, Fraction)):
        return True
    if isinstance(c, QPolynomial):
        return len(c.terms) == 1
    if isinstance(c, LaurentPolynomial):
        return len(c.coeffs) == 1
    if isinstance(c, RationalFunction):
        return c.is_laurent() and len(c.num.coeffs) == 1
    return False


def _signed_terms(items, basis, fmt, space):
    parts = []
    for word, c in items:
        b = basis(word)
        if c == 1:
            parts.append((False, b))
            continue
        if c == -1:
            parts.append((True, b))
            continue
        s = fmt(c)
        if _is_atomic(c):
            neg = s.startswith("-")
            parts.append((neg, f"{s[1:] if neg else s}{space}{b}"))
        else:
            parts.append((False, f"({s}){space}{b}"))
    if not parts:
        return "0"
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _word_text(symbol):
    return lambda w: f"{symbol}(" + ",".join(map(str, w)) + ")"


def _word_latex(symbol):
    def fmt(w):
        if symbol == "v":
            return r" \otimes ".join(f"v_{{{x}}}" for x in w)
        return f"{symbol}_{{" + ",".join(map(str, w)) + "}"
    return fmt


def tensor_text(expr, symbol: str = "e") -> str:
    return _signed_terms(expr.items(), _word_text(symbol), coeff_text, " ")


def tensor_latex(expr) -> str:
    return _signed_terms(expr.items(), _word_latex("v"), coeff_latex, " ")


def expansion_text(expansion) -> str:
    lhs = _word_text("v")(expansion.target)
    return f"{lhs} = " + _signed_terms(expansion.items(), _word_text("X"), coeff_text, " ")


def expansion_latex(expansion) -> str:
    lhs = _word_latex("v")(expansion.target)
    return f"{lhs} = " + _signed_terms(expansion.items(), _word_latex("X"), coeff_latex, " ")
