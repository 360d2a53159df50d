from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from qshuffle import (
    Braiding,
    BraidingError,
    DegenerateBasisError,
    LaurentPolynomial,
    QPolynomial,
    TensorExpr,
    Word,
    WordError,
    alpha_leading,
    basis_matrix,
    check_root_degeneracy,
    compare_words,
    content,
    enumerate_words,
    express_in_lyndon_basis,
    lyndon_expansions,
    prime_factorization,
    serre_element,
    shuffle_product,
    x_of,
)
from qshuffle.bases import serre_coefficients
from qshuffle.coefficients import field_div

SYM = Braiding.symbolic()
A2 = Braiding.cartan("A2")
q = LaurentPolynomial.q()
small_words = st.lists(st.integers(1, 3), min_size=1, max_size=5).map(tuple)


def contents_upto(k, total):
    """All content vectors over letters 1..k with 1 <= total <= ``total``."""
    out = []

    def build(letter, left, acc):
        if letter > k:
            if sum(acc.values()):
                out.append(dict(acc))
            return
        for n in range(left + 1):
            if n:
                acc[letter] = n
            build(letter + 1, left - n, acc)
            acc.pop(letter, None)

    build(1, total, {})
    return out


def test_x_of_worked_example_words():
    x = x_of((18, 19, 4, 8, 5, 7), SYM)
    printed = [
        (18, 19, 4, 8, 5, 7),
        (19, 4, 8, 5, 7, 18),
        (19, 4, 8, 5, 18, 7),
        (19, 4, 8, 18, 5, 7),
        (19, 4, 18, 8, 5, 7),
        (19, 18, 4, 8, 5, 7),
    ]
    assert sorted(tuple(w) for w in x.terms) == sorted(printed)
    assert x.coefficient((18, 19, 4, 8, 5, 7)) == 1


def test_x_of_coefficients_follow_crossings():
    x = x_of((18, 19, 4, 8, 5, 7), SYM)
    tail = (19, 4, 8, 5, 7)
    for k in range(6):
        # 18 moved past the first k letters of the tail
        word = tail[:k] + (18,) + tail[k:]
        expected = QPolynomial(1)
        for y in tail[:k]:
            expected = expected * QPolynomial.gen(18, y)
        assert x.coefficient(word) == expected


def test_alpha_examples():
    assert alpha_leading((18, 19, 4, 8, 5, 7), SYM) == 1
    assert alpha_leading((1, 1), SYM) == 1 + QPolynomial.gen(1, 1)
    assert alpha_leading((1, 1, 1), Braiding.classical()) == 6
    assert alpha_leading((1, 1), A2) == 1 + q**2


@given(small_words)
@settings(max_examples=80, deadline=None)
def test_alpha_matches_direct_expansion(a):
    assert x_of(a, SYM).coefficient(a) == alpha_leading(a, SYM)


@given(small_words)
@settings(max_examples=80, deadline=None)
def test_x_of_words_bounded_below(a):
    x = x_of(a, SYM)
    assert all(compare_words(w, a) >= 0 for w in x.terms)
    assert all(content(w) == content(a) for w in x.terms)


@pytest.mark.parametrize("p", [(1,), (2, 1), (3, 1, 2)])
def test_classical_alpha_is_factorial(p):
    for n in range(1, 10 // len(p)):
        assert alpha_leading(p * n, Braiding.classical()) == factorial(n)
        assert x_of(p * n, Braiding.classical()).coefficient(p * n) == factorial(n)


@pytest.mark.parametrize("u", [{1: 2, 2: 1}, {1: 1, 2: 1, 3: 1}, {1: 2, 2: 2}, {1: 3, 2: 1, 3: 1}])
def test_basis_matrix_triangular(u):
    m = basis_matrix(u, SYM)
    assert list(m.words) == enumerate_words(u)
    assert m.is_triangular()
    for i, a in enumerate(m.words):
        assert m.rows[i][i] == alpha_leading(a, SYM)
        for j, b in enumerate(m.words):
            if j != i and m.rows[i][j]:
                assert compare_words(b, a) > 0


@pytest.mark.parametrize("total", [1, 2, 3, 4, 5])
def test_determinant_nonzero(total):
    numeric = Braiding.numeric(2, [[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
    for u in contents_upto(3, total):
        if sum(u.values()) != total:
            continue
        for b in (SYM, numeric):
            m = basis_matrix(u, b)
            assert m.determinant() != 0


def test_matrix_entry_lookup():
    m = basis_matrix({1: 1, 2: 1}, SYM)
    assert m.entry((1, 2), (2, 1)) == QPolynomial.gen(1, 2)
    assert m.entry((2, 1), (1, 2)) == 0
    assert len(m) == 2


def _order_compatible_pairs():
    ws = [w for w in oracles.words_upto(3, 3)]
    for a in ws:
        pa = prime_factorization(a).primes()
        for b in ws:
            pb = prime_factorization(b).primes()
            if pa[-1] < pb[0] and len(a) + len(b) <= 5:
                yield a, b


def test_multiplicativity_when_primes_stay_ordered():
    pairs = list(_order_compatible_pairs())
    assert len(pairs) > 50
    for a, b in pairs[::7]:
        product = shuffle_product(x_of(a, SYM), x_of(b, SYM), SYM)
        assert product == x_of(a + b, SYM), (a, b)


def test_multiplicativity_fails_when_primes_descend():
    # (2,1) is prime, so X_(2,1) is a single word while X_2 . X_1 has two
    q21 = QPolynomial.gen(2, 1)
    product = shuffle_product(x_of((2,), SYM), x_of((1,), SYM), SYM)
    assert x_of((2, 1), SYM) == TensorExpr.basis((2, 1)).map_coefficients(QPolynomial)
    assert product.terms == {Word([2, 1]): 1, Word([1, 2]): q21}


def test_express_examples():
    e = express_in_lyndon_basis((1, 2), A2)
    assert e.combination == {Word([1, 2]): 1, Word([2, 1]): -(q ** -1)}
    assert express_in_lyndon_basis((1, 1), A2).combination == {
        Word([1, 1]): field_div(1, 1 + q**2)
    }
    numeric = Braiding.numeric(2, "A2")
    assert express_in_lyndon_basis((1, 1), numeric).combination == {Word([1, 1]): Fraction(1, 5)}


@pytest.mark.parametrize(
    "braiding",
    [Braiding.classical(), A2, Braiding.numeric(2, [[2, -1, 0], [-1, 2, -1], [0, -1, 2]])],
    ids=["classical", "A2", "numeric-q2"],
)
def test_round_trip(braiding):
    letters = 3 if braiding is not A2 else 2
    for u in contents_upto(letters, 4):
        expansions = lyndon_expansions(u, braiding)
        for a, expansion in expansions.items():
            assert all(compare_words(c, a) >= 0 for c in expansion.combination)
            assert expansion.reconstruct(braiding) == TensorExpr.basis(a).map_coefficients(braiding.to_field)


def test_express_needs_field():
    with pytest.raises(BraidingError):
        express_in_lyndon_basis((1, 2), SYM)
    with pytest.raises(WordError):
        express_in_lyndon_basis((), A2)


def test_degenerate_specialization_names_word():
    table = Braiding.table({(1, 1): -1, (1, 2): 1, (2, 1): 1, (2, 2): 1})
    with pytest.raises(DegenerateBasisError) as info:
        express_in_lyndon_basis((1, 1), table)
    assert info.value.word == Word([1, 1])
    assert "(1,1)" in str(info.value)


@pytest.mark.parametrize("name", ["A1xA1", "A2", "B2", "G2"])
def test_serre_vanishes(name):
    b = Braiding.cartan(name)
    assert serre_element(1, 2, b) == TensorExpr()
    assert serre_element(2, 1, b) == TensorExpr()


def test_serre_vanishes_numerically():
    b = Braiding.numeric(Fraction(3, 2), "B2")
    assert serre_element(1, 2, b) == TensorExpr()


def test_serre_coefficients_a2():
    assert serre_coefficients(1, 2, A2) == [1, -(q + q ** -1), 1]


def test_tampered_serre_does_not_vanish():
    assert serre_element(1, 2, A2, coefficients=[1, -2, 1]) != TensorExpr()
    assert serre_element(1, 2, A2, coefficients=[1, -(q + q ** -1), 2]) != TensorExpr()


def test_serre_rejects_bad_input():
    with pytest.raises(WordError):
        serre_element(1, 1, A2)
    with pytest.raises(BraidingError):
        serre_element(1, 2, SYM)
    with pytest.raises(BraidingError):
        serre_element(1, 5, A2)


def test_rootcheck():
    assert check_root_degeneracy({1: 2}, A2, 4) == [(Word([1, 1]), True)]
    assert check_root_degeneracy({1: 2}, A2, 3) == [(Word([1, 1]), False)]
    verdicts = dict(check_root_degeneracy({1: 1, 2: 1}, A2, 4))
    assert verdicts == {Word([2, 1]): False, Word([1, 2]): False}
    with pytest.raises(ValueError):
        check_root_degeneracy({1: 2}, A2, 1)
    with pytest.raises(BraidingError):
        check_root_degeneracy({1: 2}, Braiding.numeric(2, "A2"), 4)
