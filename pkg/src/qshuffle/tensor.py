"""Finite linear combinations of tensor words ``v_a = v_{x1} (x) ... (x) v_{xn}``."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .words import EMPTY, ContentVector, Word, content

__all__ = ["TensorExpr"]


class TensorExpr:
    """Canonical map Word -> nonzero coefficient.

    Values are treated as immutable.  Iteration and :meth:`items` use ascending
    word order, so ``v_a`` comes first in ``X_a``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        merged: dict[Word, object] = {}
        for w, c in terms:
            w = w if isinstance(w, Word) else Word(w)
            merged[w] = merged[w] + c if w in merged else c
        self._terms = {w: c for w, c in merged.items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> "TensorExpr":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def basis(cls, word, coeff=1) -> "TensorExpr":
        """The single tensor word ``coeff * v_word``."""
        w = word if isinstance(word, Word) else Word(word)
        return cls._raw({w: coeff} if coeff else {})

    @classmethod
    def unit(cls, one=1) -> "TensorExpr":
        return cls._raw({EMPTY: one})

    @property
    def terms(self) -> dict[Word, object]:
        return dict(self._terms)

    def items(self) -> list[tuple[Word, object]]:
        return sorted(self._terms.items(), key=lambda wc: wc[0])

    def words(self) -> list[Word]:
        return sorted(self._terms)

    def coefficient(self, word):
        w = word if isinstance(word, Word) else Word(word)
        return self._terms.get(w, 0)

    def contents(self) -> set[ContentVector]:
        return {content(w) for w in self._terms}

    def map_coefficients(self, f: Callable) -> "TensorExpr":
        return TensorExpr((w, f(c)) for w, c in self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.items())

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        if not isinstance(other, TensorExpr):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            if w in out:
                s = out[w] + c
                if s:
                    out[w] = s
                else:
                    del out[w]
            else:
                out[w] = c
        return TensorExpr._raw(out)

    def __neg__(self):
        return TensorExpr._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorExpr):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "TensorExpr":
        if not c:
            return TensorExpr()
        return TensorExpr((w, c * v) for w, v in self._terms.items())

    def __rmul__(self, c):
        if isinstance(c, TensorExpr):
            return NotImplemented
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, TensorExpr):
            return NotImplemented
        if self._terms.keys() != other._terms.keys():
            return False
        return all(c == other._terms[w] for w, c in self._terms.items())

    __hash__ = None

    def __repr__(self):
        inner = ", ".join(f"{w}: {c}" for w, c in self.items())
        return f"TensorExpr({{{inner}}})"
