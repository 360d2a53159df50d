"""Shuffle permutations, their braid lifts, and the quantum shuffle product.

For a shuffle ``w`` of positions, the lift ``T_w`` moves letter ``a_i`` to
position ``w(i)``.  Every inversion ``i < j`` with ``w(i) > w(j)`` is one
crossing of ``a_i`` over ``a_j`` and contributes ``q_{a_i a_j}``; the product
over inversions does not depend on the reduced expression chosen for ``w``.
"""

from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .braiding import Braiding
from .errors import TermLimitExceeded, WordError
from .tensor import TensorExpr
from .words import Word

__all__ = [
    "ShufflePermutation",
    "shuffle_permutations",
    "lift_coefficient",
    "shuffle_product",
    "shuffle_product_many",
    "MAX_WORKERS",
    "DEFAULT_MAX_TERMS",
]

MAX_WORKERS = 64
DEFAULT_MAX_TERMS = 10**6
# below this many raw terms a process pool costs more than it saves
_PARALLEL_THRESHOLD = 20_000


@dataclass(frozen=True)
class ShufflePermutation:
    """``images[i-1] = w(i)`` (1-based), increasing on each block of ``block_lengths``."""

    images: tuple
    block_lengths: tuple

    def __post_init__(self):
        n = sum(self.block_lengths)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{n}")
        start = 0
        for length in self.block_lengths:
            block = self.images[start:start + length]
            if any(a >= b for a, b in zip(block, block[1:])):
                raise ValueError(f"{self.images} is not increasing on block {block}")
            start += length

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self):
        return len(self.images)

    def inversions(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)``, 1-based, with ``i < j`` and ``w(i) > w(j)``."""
        w = self.images
        return [(i + 1, j + 1) for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]]

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))


def shuffle_permutations(block_lengths: Sequence[int]) -> list[ShufflePermutation]:
    """All ``(l_1, ..., l_r)``-shuffles, built block by block from position subsets."""
    block_lengths = tuple(int(l) for l in block_lengths)
    if not block_lengths or any(l < 0 for l in block_lengths):
        raise ValueError("need at least one block of nonnegative length")
    n = sum(block_lengths)
    results = []

    def place(k, free, images):
        if k == len(block_lengths):
            results.append(ShufflePermutation(tuple(images), block_lengths))
            return
        for chosen in itertools.combinations(free, block_lengths[k]):
            rest = [p for p in free if p not in chosen]
            place(k + 1, rest, images + list(chosen))

    place(0, list(range(1, n + 1)), [])
    return results


def lift_coefficient(w: ShufflePermutation, a: Iterable[int], braiding: Braiding):
    """Apply ``T_w`` to ``v_a``: returns ``(word, coefficient)``."""
    a = Word(a)
    if len(a) != len(w):
        raise WordError(f"word of length {len(a)} does not match a permutation of {len(w)} points")
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[w.images[i] - 1] = x
    crossings = Counter((a[i - 1], a[j - 1]) for i, j in w.inversions())
    return Word._trusted(out), braiding.crossing(crossings)


def _pair_terms(u: Word, v: Word, braiding: Braiding, start: int = 0, stop: int | None = None):
    """Yield ``(word, crossing coefficient)`` for the (|u|, |v|)-shuffles of ``u.v``.

    ``start``/``stop`` select a slice of the combination sequence, for splitting
    one large product across workers.
    """
    p, n = len(u), len(u) + len(v)
    combos = itertools.combinations(range(n), p)
    if start or stop is not None:
        combos = itertools.islice(combos, start, stop)
    for positions in combos:
        out = [0] * n
        taken = set(positions)
        crossings: dict[tuple[int, int], int] = {}
        for i, pos in enumerate(positions):
            x = u[i]
            out[pos] = x
            # letters of v placed before u_i are exactly v_0 .. v_{pos-i-1}
            for j in range(pos - i):
                key = (x, v[j])
                crossings[key] = crossings.get(key, 0) + 1
        it = iter(v)
        for pos in range(n):
            if pos not in taken:
                out[pos] = next(it)
        yield Word._trusted(out), braiding.crossing(crossings)


def _accumulate(acc: dict, word, coeff):
    if word in acc:
        s = acc[word] + coeff
        if s:
            acc[word] = s
        else:
            del acc[word]
    elif coeff:
        acc[word] = coeff


def _expand_chunk(task):
    u, cu, v, cv, braiding, start, stop = task
    acc: dict = {}
    base = cu * cv
    for word, c in _pair_terms(u, v, braiding, start, stop):
        _accumulate(acc, word, base * c)
    return acc


def _resolve_workers(workers: int | None) -> int:
    if workers is None or workers == 1:
        return 1
    if workers < 0:
        raise ValueError("worker count must be nonnegative")
    if workers == 0:
        workers = os.cpu_count() or 1
    return min(workers, MAX_WORKERS)


def shuffle_product(
    a: TensorExpr,
    b: TensorExpr,
    braiding: Braiding,
    *,
    max_terms: int | None = DEFAULT_MAX_TERMS,
    workers: int | None = 1,
) -> TensorExpr:
    """Quantum shuffle product, extended bilinearly over the terms of ``a`` and ``b``.

    ``max_terms`` bounds the number of shuffle summands before merging;
    ``workers > 1`` (or 0 for one per CPU) splits large expansions over
    processes.  The result does not depend on ``workers``.
    """
    tasks = []
    raw = 0
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            count = math.comb(len(u) + len(v), len(u))
            raw += count
            tasks.append((u, cu, v, cv, count))
    if max_terms is not None and raw > max_terms:
        raise TermLimitExceeded(f"shuffle expansion needs {raw} terms, limit is {max_terms}")

    workers = _resolve_workers(workers)
    if workers > 1 and raw >= _PARALLEL_THRESHOLD:
        chunk = max(1, -(-raw // (4 * workers)))
        jobs = []
        for u, cu, v, cv, count in tasks:
            for start in range(0, count, chunk):
                jobs.append((u, cu, v, cv, braiding, start, min(count, start + chunk)))
        acc: dict = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for partial in pool.map(_expand_chunk, jobs):
                for word, c in partial.items():
                    _accumulate(acc, word, c)
        return TensorExpr._raw(acc)

    acc = {}
    for u, cu, v, cv, _ in tasks:
        base = cu * cv
        for word, c in _pair_terms(u, v, braiding):
            _accumulate(acc, word, base * c)
    return TensorExpr._raw(acc)


def shuffle_product_many(
    factors: Sequence[TensorExpr],
    braiding: Braiding,
    *,
    max_terms: int | None = DEFAULT_MAX_TERMS,
    workers: int | None = 1,
) -> TensorExpr:
    """Left fold of :func:`shuffle_product`; the empty product is the unit."""
    result = TensorExpr.unit(braiding.one())
    for f in factors:
        result = shuffle_product(result, f, braiding, max_terms=max_terms, workers=workers)
    return result
