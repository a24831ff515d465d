import pytest
from hypothesis import given, settings

from backend.algebra.algebra_core import LinComb
from backend.algebra.errors import DimensionMismatchError
from backend.algebra.exponents import NAT, WEAK, ExponentVector, ev_product, unit_vector
from backend.algebra.quasi_shuffle import (
    TensorWord,
    concat,
    qshuffle,
    qshuffle_lincomb,
    quasi_shuffle_count,
    word_length,
)
from tests.oracles import quasi_shuffles_by_surjection
from tests.strategies import compositions, lincombs, tensor_words

u = ExponentVector.of(1, 0)
v = ExponentVector.of(0, 1)
w = ExponentVector.of(2, 1)
EMPTY = TensorWord.empty(2)


def word(*letters):
    return TensorWord.of(*letters)


def test_unit():
    assert qshuffle(EMPTY, word(u, v)) == LinComb.basis(word(u, v))
    assert qshuffle(word(u, v), EMPTY) == LinComb.basis(word(u, v))


def test_length_one_words():
    assert qshuffle(word(u), word(v)) == LinComb({word(u, v): 1, word(v, u): 1, word(u * v): 1})


def test_one_by_two():
    expected = LinComb(
        {
            word(u, v, w): 1,
            word(v, u, w): 1,
            word(v, w, u): 1,
            word(u * v, w): 1,
            word(v, u * w): 1,
        }
    )
    assert qshuffle(word(u), word(v, w)) == expected


def test_concat_and_length():
    assert concat(EMPTY, word(u)) == word(u)
    assert concat(word(u), word(v)) == word(u, v)
    assert concat(word(u, v), word(w)) == word(u, v, w)
    assert [word_length(x) for x in (EMPTY, word(u), word(u, v, w))] == [0, 1, 3]


def test_incompatible_alphabets():
    with pytest.raises(DimensionMismatchError):
        qshuffle(word(u), word(ExponentVector.of(1, 0, 0)))
    with pytest.raises(DimensionMismatchError):
        concat(word(u), word(ExponentVector.of(1, 0, monoid=WEAK)))


def test_text_form():
    assert word(u, v).serialize() == "([1,0],[0,1])"
    assert EMPTY.serialize() == "()"


def test_zero_letters_are_legal_in_plain_words():
    zero = ExponentVector.of(0, 0)
    product = qshuffle(word(zero), word(zero))
    assert product == LinComb({word(zero, zero): 2, word(zero): 1})


@pytest.mark.parametrize("p", range(5))
@pytest.mark.parametrize("q", range(5))
def test_count_matches_surjection_oracle(p, q):
    m = p + q
    a = TensorWord(tuple(unit_vector(i + 1, max(m, 1)) for i in range(p)), max(m, 1), NAT)
    b = TensorWord(tuple(unit_vector(p + j + 1, max(m, 1)) for j in range(q)), max(m, 1), NAT)
    product = qshuffle(a, b)
    assert sum(product.values()) == quasi_shuffle_count(p, q)
    assert dict(product) == quasi_shuffles_by_surjection(a, b, ev_product)


@settings(max_examples=500, deadline=None, derandomize=True)
@given(tensor_words(2, WEAK, 3), tensor_words(2, WEAK, 3))
def test_commutative_and_matches_oracle(a, b):
    ab = qshuffle(a, b)
    assert ab == qshuffle(b, a)
    assert dict(ab) == quasi_shuffles_by_surjection(a, b, ev_product)
    for x in ab:
        assert max(len(a), len(b)) <= len(x) <= len(a) + len(b)


@settings(max_examples=200, deadline=None, derandomize=True)
@given(compositions(2, NAT, 3), compositions(2, NAT, 3), compositions(2, NAT, 3))
def test_associative(a, b, c):
    left = qshuffle_lincomb(qshuffle(a, b), LinComb.basis(c))
    right = qshuffle_lincomb(LinComb.basis(a), qshuffle(b, c))
    assert left == right


@settings(max_examples=100, deadline=None, derandomize=True)
@given(lincombs(compositions(2, NAT, 2)), lincombs(compositions(2, NAT, 2)))
def test_bilinear_extension_is_commutative(x, y):
    assert qshuffle_lincomb(x, y) == qshuffle_lincomb(y, x)
