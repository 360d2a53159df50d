import itertools
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from qshuffle import (
    Braiding,
    BraidingError,
    QPolynomial,
    ShufflePermutation,
    TensorExpr,
    TermLimitExceeded,
    Word,
    WordError,
    content,
    lift_coefficient,
    shuffle_permutations,
    shuffle_product,
    shuffle_product_many,
)
import qshuffle.shuffle as shuffle_module
from qshuffle.shuffle import _pair_terms

SYM = Braiding.symbolic()
words3 = st.lists(st.integers(1, 3), min_size=0, max_size=4).map(tuple)


def symbolic_weight(crossed):
    result = QPolynomial(1)
    for (x, y), n in crossed.items():
        result = result * QPolynomial.gen(x, y, n)
    return result


def e(*letters):
    return TensorExpr.basis(Word(letters))


def test_two_letters():
    result = shuffle_product(e(1), e(2), SYM)
    assert result.items() == [(Word([1, 2]), QPolynomial(1)), (Word([2, 1]), QPolynomial.gen(1, 2))]


def test_e11_times_e2():
    q12 = QPolynomial.gen(1, 2)
    result = shuffle_product(e(1, 1), e(2), SYM)
    assert result.terms == {Word([1, 1, 2]): 1, Word([1, 2, 1]): q12, Word([2, 1, 1]): q12 * q12}


def test_classical_two_letters():
    result = shuffle_product(e(1), e(2), Braiding.classical())
    assert result.terms == {Word([1, 2]): 1, Word([2, 1]): 1}


def test_unit_and_zero():
    one = TensorExpr.unit(QPolynomial(1))
    assert shuffle_product(one, e(3, 1), SYM) == e(3, 1).map_coefficients(QPolynomial)
    assert shuffle_product(TensorExpr(), e(1), SYM) == TensorExpr()


@pytest.mark.parametrize("blocks", [(2, 1), (1, 2), (2, 2), (3, 2), (1, 1, 1), (2, 1, 2)])
def test_shuffle_permutations_match_filter(blocks):
    perms = shuffle_permutations(blocks)
    n = sum(blocks)
    brute = []
    for perm in itertools.permutations(range(1, n + 1)):
        start, ok = 0, True
        for length in blocks:
            block = perm[start:start + length]
            ok = ok and all(a < b for a, b in zip(block, block[1:]))
            start += length
        if ok:
            brute.append(perm)
    assert sorted(p.images for p in perms) == sorted(brute)
    expected = factorial(n)
    for length in blocks:
        expected //= factorial(length)
    assert len(perms) == expected


def test_shuffle_permutation_validation():
    with pytest.raises(ValueError):
        ShufflePermutation((2, 1), (2,))
    with pytest.raises(ValueError):
        ShufflePermutation((1, 1), (1, 1))
    w = ShufflePermutation((2, 3, 1), (2, 1))
    assert w(1) == 2 and w.inversions() == [(1, 3), (2, 3)]
    assert ShufflePermutation((1, 2), (1, 1)).is_identity()


@given(st.lists(st.integers(1, 3), min_size=1, max_size=5), st.data())
@settings(max_examples=80, deadline=None)
def test_lift_matches_generator_oracle(letters, data):
    n = len(letters)
    p = data.draw(st.integers(0, n))
    perm = data.draw(st.sampled_from(shuffle_permutations((p, n - p))))
    word, coeff = lift_coefficient(perm, letters, SYM)
    expected_word, crossed = oracles.braid_by_generators(letters, perm.images)
    assert tuple(word) == expected_word
    assert coeff == symbolic_weight(crossed)


def test_lift_on_every_permutation_of_five():
    # any permutation, not just shuffles, agrees with stepwise generators
    letters = (1, 2, 3, 1, 2)
    for images in itertools.permutations(range(1, 6)):
        w = ShufflePermutation(images, (1,) * 5)
        word, coeff = lift_coefficient(w, letters, SYM)
        expected_word, crossed = oracles.braid_by_generators(letters, images)
        assert tuple(word) == expected_word and coeff == symbolic_weight(crossed)


def test_lift_length_mismatch():
    with pytest.raises(WordError):
        lift_coefficient(ShufflePermutation((1, 2), (1, 1)), (1, 2, 3), SYM)


@given(words3, words3)
@settings(max_examples=80, deadline=None)
def test_product_matches_oracle(u, v):
    ours = shuffle_product(e(*u), e(*v), SYM)
    expected = oracles.shuffle_by_oracle(u, v, symbolic_weight)
    assert {tuple(w): c for w, c in ours.terms.items()} == expected


@given(words3, words3)
@settings(max_examples=60, deadline=None)
def test_raw_term_count_and_grading(u, v):
    raw = list(_pair_terms(Word(u), Word(v), SYM))
    assert len(raw) == comb(len(u) + len(v), len(u))
    target = content(u + v) if u + v else None
    for w, _ in raw:
        assert target is None or content(w) == target


triples = st.tuples(
    st.lists(st.integers(1, 3), max_size=3).map(tuple),
    st.lists(st.integers(1, 3), max_size=2).map(tuple),
    st.lists(st.integers(1, 3), max_size=2).map(tuple),
)


@given(triples)
@settings(max_examples=60, deadline=None)
def test_associativity(abc):
    a, b, c = (e(*w) for w in abc)
    left = shuffle_product(shuffle_product(a, b, SYM), c, SYM)
    right = shuffle_product(a, shuffle_product(b, c, SYM), SYM)
    assert left == right


@given(words3, words3)
@settings(max_examples=60, deadline=None)
def test_classical_is_specialized_symbolic(u, v):
    sym = shuffle_product(e(*u), e(*v), SYM)
    cl = shuffle_product(e(*u), e(*v), Braiding.classical())
    assert cl.terms == {w: sum(c.terms.values()) for w, c in sym.terms.items()}
    assert all(isinstance(c, int) and c > 0 for c in cl.terms.values())


@pytest.mark.parametrize("n", range(1, 7))
def test_classical_power_of_letter(n):
    result = shuffle_product_many([e(1)] * n, Braiding.classical())
    assert result.terms == {Word([1] * n): factorial(n)}


def test_bilinearity():
    q12 = QPolynomial.gen(1, 2)
    a = e(1).map_coefficients(QPolynomial) + e(2).scale(q12)
    b = e(3)
    expected = shuffle_product(e(1), b, SYM) + shuffle_product(e(2), b, SYM).scale(q12)
    assert shuffle_product(a, b, SYM) == expected


def test_term_limit():
    with pytest.raises(TermLimitExceeded):
        shuffle_product(e(1, 2, 3, 1), e(2, 3, 1, 2), SYM, max_terms=69)
    assert shuffle_product(e(1, 2, 3, 1), e(2, 3, 1, 2), SYM, max_terms=70)
    assert shuffle_product(e(1, 2, 3, 1), e(2, 3, 1, 2), SYM, max_terms=None)


def test_undefined_table_pair():
    table = Braiding.table({(1, 1): 2, (1, 2): 3})
    assert shuffle_product(e(1), e(2), table).terms == {Word([1, 2]): 1, Word([2, 1]): 3}
    with pytest.raises(BraidingError):
        shuffle_product(e(2), e(1), table)


def test_parallel_matches_serial(monkeypatch):
    monkeypatch.setattr(shuffle_module, "_PARALLEL_THRESHOLD", 0)
    a = e(1, 2, 3, 1, 2, 3, 1) + e(2, 2).scale(QPolynomial.gen(1, 3))
    b = e(3, 2, 1, 3, 2, 1, 2, 3)
    serial = shuffle_product(a, b, SYM, workers=1)
    parallel = shuffle_product(a, b, SYM, workers=3)
    assert serial == parallel
    assert serial.items() == parallel.items()


def test_worker_count_validated():
    with pytest.raises(ValueError):
        shuffle_product(e(1), e(2), SYM, workers=-1)
