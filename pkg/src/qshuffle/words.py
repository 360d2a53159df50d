"""Words over the positive integers, their total order, and Lyndon factorization.

The order used throughout is lexicographic by letter, except that a proper
prefix compares *greater* than any of its extensions (``a.b <= a``).  Primes
(Lyndon words) are the words strictly greater than each of their proper
suffixes, and every word factors uniquely as a product of primes in strictly
ascending order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import WordError

__all__ = [
    "Word",
    "EMPTY",
    "ContentVector",
    "PrimeFactorization",
    "compare_words",
    "is_prime",
    "first_prime",
    "prime_factorization",
    "content",
    "enumerate_words",
    "enumerate_primes",
    "multinomial",
    "parse_word",
]


def compare_words(a: Iterable[int], b: Iterable[int]) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to, or greater than ``b``."""
    a = tuple(a)
    b = tuple(b)
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    if len(a) == len(b):
        return 0
    # the shorter word is a proper prefix of the longer one
    return 1 if len(a) < len(b) else -1


class Word(tuple):
    """Immutable word; comparisons follow the prefix-greater lexicographic order.

    ``Word(())`` is the empty word, used only as the unit of products.
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        letters = tuple(letters)
        for x in letters:
            if isinstance(x, bool) or not isinstance(x, int) or x < 1:
                raise WordError(f"letters must be positive integers, got {x!r}")
        return super().__new__(cls, letters)

    @classmethod
    def _trusted(cls, letters) -> "Word":
        # hot path: letters already validated
        return tuple.__new__(cls, letters)

    # tuple's own ordering treats a prefix as smaller, so all four are replaced
    def __lt__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        return compare_words(self, other) < 0

    def __le__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        return compare_words(self, other) <= 0

    def __gt__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        return compare_words(self, other) > 0

    def __ge__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        return compare_words(self, other) >= 0

    def __eq__(self, other):
        return tuple.__eq__(self, other)

    def __ne__(self, other):
        return tuple.__ne__(self, other)

    __hash__ = tuple.__hash__

    def __add__(self, other):
        return Word._trusted(tuple.__add__(self, tuple(other)))

    def __getitem__(self, item):
        result = tuple.__getitem__(self, item)
        if isinstance(item, slice):
            return Word._trusted(result)
        return result

    def __repr__(self):
        return f"Word({list(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"


EMPTY = Word()


def parse_word(text: str) -> Word:
    """Parse a comma-separated literal such as ``"18,19,4"``."""
    parts = [p.strip() for p in text.strip().strip("()[]").split(",")]
    if not parts or any(not p for p in parts):
        raise WordError(f"malformed word literal {text!r}")
    try:
        return Word(int(p) for p in parts)
    except ValueError as exc:
        raise WordError(f"malformed word literal {text!r}") from exc


def _require_nonempty(a, what):
    if len(a) == 0:
        raise WordError(f"{what} undefined for empty word")


def is_prime(a: Iterable[int]) -> bool:
    """True iff every proper suffix of ``a`` is strictly less than ``a``."""
    a = tuple(a)
    _require_nonempty(a, "prime test")
    return all(compare_words(a[i:], a) < 0 for i in range(1, len(a)))


def first_prime(a: Iterable[int]) -> Word:
    """The longest prime prefix of ``a``."""
    a = Word(a)
    _require_nonempty(a, "first prime")
    best = 1
    for n in range(2, len(a) + 1):
        if is_prime(a[:n]):
            best = n
    return a[:best]


@dataclass(frozen=True)
class PrimeFactorization:
    """Ascending primes with multiplicities, e.g. ``((Word([2, 1]), 2),)``."""

    factors: tuple

    def primes(self) -> list[Word]:
        """The primes repeated by multiplicity, in ascending order."""
        return [p for p, n in self.factors for _ in range(n)]

    def word(self) -> Word:
        return Word._trusted(itertools.chain.from_iterable(self.primes()))

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        return " ".join(str(p) if n == 1 else f"{p}^{n}" for p, n in self.factors)


def prime_factorization(a: Iterable[int]) -> PrimeFactorization:
    """Unique factorization of ``a`` into ascending primes by peeling first primes."""
    rest = Word(a)
    _require_nonempty(rest, "prime factorization")
    factors: list[list] = []
    while rest:
        p = first_prime(rest)
        rest = rest[len(p):]
        if factors and factors[-1][0] == p:
            factors[-1][1] += 1
        else:
            factors.append([p, 1])
    return PrimeFactorization(tuple((p, n) for p, n in factors))


@dataclass(frozen=True)
class ContentVector:
    """Letter multiplicities of a word; ``counts`` is sorted by letter with no zeros."""

    counts: tuple = ()

    @classmethod
    def from_mapping(cls, counts: Mapping[int, int]) -> "ContentVector":
        items = []
        for letter, n in counts.items():
            letter, n = int(letter), int(n)
            if letter < 1:
                raise WordError(f"letters must be positive integers, got {letter}")
            if n < 0:
                raise WordError(f"negative multiplicity for letter {letter}")
            if n:
                items.append((letter, n))
        return cls(tuple(sorted(items)))

    @classmethod
    def parse(cls, text: str) -> "ContentVector":
        """Parse ``"1:2,2:1"``."""
        counts: dict[int, int] = {}
        try:
            for part in text.split(","):
                letter, n = part.split(":")
                letter, n = int(letter), int(n)
                if letter in counts:
                    raise WordError(f"letter {letter} repeated in content literal {text!r}")
                if n < 1:
                    raise WordError(f"multiplicities must be positive in {text!r}")
                counts[letter] = n
        except ValueError as exc:
            raise WordError(f"malformed content literal {text!r}") from exc
        return cls.from_mapping(counts)

    @property
    def total(self) -> int:
        return sum(n for _, n in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def __getitem__(self, letter):
        return dict(self.counts).get(letter, 0)

    def __add__(self, other: "ContentVector") -> "ContentVector":
        merged = self.as_dict()
        for letter, n in other.counts:
            merged[letter] = merged.get(letter, 0) + n
        return ContentVector.from_mapping(merged)

    def __str__(self):
        return ",".join(f"{x}:{n}" for x, n in self.counts)


def content(a: Iterable[int]) -> ContentVector:
    counts: dict[int, int] = {}
    for x in a:
        counts[x] = counts.get(x, 0) + 1
    return ContentVector.from_mapping(counts)


def multinomial(counts: Iterable[int]) -> int:
    counts = list(counts)
    result = math.factorial(sum(counts))
    for n in counts:
        result //= math.factorial(n)
    return result


def _multiset_permutations(counts: dict[int, int], length: int) -> Iterator[tuple]:
    if length == 0:
        yield ()
        return
    for letter in sorted(counts, reverse=True):
        if counts[letter]:
            counts[letter] -= 1
            for tail in _multiset_permutations(counts, length - 1):
                yield (letter,) + tail
            counts[letter] += 1


def enumerate_words(u: ContentVector | Mapping[int, int]) -> list[Word]:
    """All words with content ``u``, greatest first."""
    if not isinstance(u, ContentVector):
        u = ContentVector.from_mapping(u)
    if u.total == 0:
        raise WordError("content vector must have positive total")
    words = [Word._trusted(w) for w in _multiset_permutations(u.as_dict(), u.total)]
    words.sort(reverse=True)
    return words


def _standard_lyndon(k: int, n: int) -> Iterator[list[int]]:
    # Duval's generator: standard Lyndon words over {0..k-1} of length <= n
    w = [-1]
    while w:
        w[-1] += 1
        yield list(w)
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


def enumerate_primes(alphabet_size: int, max_len: int) -> dict[int, list[Word]]:
    """Primes over ``{1..alphabet_size}`` of length at most ``max_len``, keyed by length.

    Reversing the alphabet turns the prefix-greater order into the reverse of
    the usual lexicographic order, so primes here are exactly the classical
    Lyndon words over the reversed alphabet.
    """
    if alphabet_size < 1 or max_len < 1:
        raise WordError("alphabet_size and max_len must be positive")
    by_length: dict[int, list[Word]] = {n: [] for n in range(1, max_len + 1)}
    for w in _standard_lyndon(alphabet_size, max_len):
        by_length[len(w)].append(Word._trusted(alphabet_size - s for s in w))
    for words in by_length.values():
        words.sort(reverse=True)
    return by_length
