from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings

from backend.algebra.algebra_core import LinComb
from backend.algebra.bases import f_to_m
from backend.algebra.compositions import MultiComposition, des, nat_compositions
from backend.algebra.errors import DimensionMismatchError, TruncationError
from backend.algebra.exponents import EPSILON, NAT, WEAK, ExponentVector
from backend.algebra.quasi_shuffle import TensorWord
from backend.algebra.realization import (
    SeriesMonomial,
    TruncatedSeries,
    expand_f,
    expand_f_by_letters,
    expand_m,
    expand_m_lincomb,
    head_monomial,
    is_multi_quasisymmetric,
    series_add,
    series_mul,
    series_one,
    series_scale,
    verify_product,
)
from tests.strategies import compositions, tensor_words


def mc(rows):
    return MultiComposition.from_matrix(rows)


def mono(*factors, monoid=NAT):
    return SeriesMonomial(tuple(((i, j), e) for i, j, e in factors), monoid)


def series(N, m, terms, monoid=NAT):
    return TruncatedSeries(N, m, monoid, LinComb(terms))


SMALL_F = [c for m in (2, 3) for n in range(1, 5) for c in nat_compositions(n, m)]


def test_expand_m_of_the_unit():
    assert expand_m(MultiComposition((), 2), 3) == series_one(3, 2)
    assert expand_m(MultiComposition((), 2), 3).serialize() == "1"


def test_expand_m_single_column():
    s = expand_m(mc([[1], [0]]), 3)
    assert s.serialize() == "x[1,1] + x[1,2] + x[1,3]"
    assert len(s) == 3


def test_expand_m_leading_term():
    w = mc([[1, 0, 1], [0, 2, 1], [3, 1, 2], [0, 1, 1]])
    expected = mono(
        (1, 1, 1), (3, 1, 3),
        (2, 2, 2), (3, 2, 1), (4, 2, 1),
        (1, 3, 1), (2, 3, 1), (3, 3, 2), (4, 3, 1),
    )
    assert expand_m(w, 3) == series(3, 4, {expected: 1})
    assert expand_m(w, 5).coefficient(expected) == 1
    assert len(expand_m(w, 5)) == 10


def test_expand_m_rejects_short_truncation():
    with pytest.raises(TruncationError):
        expand_m(mc([[1, 1], [0, 0]]), 1)
    with pytest.raises(TruncationError):
        expand_m(mc([[1], [0]]), 0)


def test_expand_f_column_example():
    c = mc([[1], [2], [1]])
    N = 3
    expected = {}
    for i1, i2, i3, i4 in combinations_with_replacement(range(1, N + 1), 4):
        key = mono((1, i1, 1), (2, i2, 1), (2, i3, 1), (3, i4, 1))
        expected[key] = expected.get(key, 0) + 1
    assert expand_f(c, N) == series(N, 3, expected)


def test_expand_f_with_a_descent():
    c = mc([[0, 2], [1, 0], [0, 1]])
    N = 4
    expected = {}
    for i1, i2, i3, i4 in combinations_with_replacement(range(1, N + 1), 4):
        if i1 < i2:
            key = mono((2, i1, 1), (1, i2, 1), (1, i3, 1), (3, i4, 1))
            expected[key] = expected.get(key, 0) + 1
    assert expand_f(c, N) == series(N, 3, expected)


def test_expand_f_vanishes_when_descents_do_not_fit():
    c = mc([[0, 2], [1, 0], [0, 1]])
    assert des(c)
    assert len(expand_f(c, 1)) == 0
    assert expand_f(c, 1).serialize() == "0"
    assert len(expand_f(mc([[2], [1]]), 1)) == 1


@pytest.mark.parametrize("c", SMALL_F, ids=lambda c: c.serialize())
def test_both_fundamental_expansions_agree_with_monomial_sum(c):
    N = 6
    direct = expand_f(c, N)
    assert direct == expand_f_by_letters(c, N)
    assert direct == expand_m_lincomb(f_to_m(c), N, c.m)
    assert is_multi_quasisymmetric(direct)


def test_series_mul_examples():
    x11 = series(3, 1, {mono((1, 1, 1)): 1})
    s = series(3, 1, {mono((1, 1, 1)): 2, mono((1, 2, 3)): -1})
    assert series_mul(series_one(3, 1), s) == s
    assert series_mul(x11, x11) == series(3, 1, {mono((1, 1, 2)): 1})
    eps = series(3, 1, {mono((1, 1, EPSILON), monoid=WEAK): 1}, WEAK)
    sq = series(3, 1, {mono((1, 1, 2), monoid=WEAK): 1}, WEAK)
    assert series_mul(eps, sq) == sq
    assert series_mul(eps, eps) == eps


def test_epsilon_factors_are_kept():
    m = mono((1, 1, EPSILON), (2, 1, 0), monoid=WEAK)
    assert m.factors == (((1, 1), EPSILON),)
    assert m.serialize() == "x[1,1]^e"
    assert m != SeriesMonomial.one(WEAK)


def test_series_arithmetic_and_text_form():
    a = series(2, 2, {mono((1, 1, 1)): 1, mono((2, 2, 3)): -2})
    assert series_add(a, series_scale(-1, a)).serialize() == "0"
    assert a.serialize() == "x[1,1] - 2*x[2,2]^3"
    assert series_scale(3, series_one(2, 2)).serialize() == "3"
    assert (a + a) == series_scale(2, a)
    assert a.to_records()[0] == {"coefficient": "1", "monomial": [[1, 1, "1"]]}


def test_series_parameters_must_match():
    with pytest.raises(DimensionMismatchError):
        series_mul(series_one(3, 2), series_one(4, 2))
    with pytest.raises(DimensionMismatchError):
        series_add(series_one(3, 2), series_one(3, 2, WEAK))
    with pytest.raises(TruncationError):
        series(2, 1, {mono((1, 3, 1)): 1})
    with pytest.raises(DimensionMismatchError):
        series(2, 1, {mono((2, 1, 1)): 1})


def test_verify_product_examples():
    u = ExponentVector.of(1, 0)
    v = ExponentVector.of(0, 1)
    assert verify_product(TensorWord.empty(2), TensorWord.of(u, v), 3)
    assert verify_product(TensorWord.of(u), TensorWord.of(v), 3)
    lhs = series_mul(expand_m(TensorWord.of(u), 3), expand_m(TensorWord.of(v), 3))
    assert len(lhs) == 3 * 2 + 3
    with pytest.raises(TruncationError):
        verify_product(TensorWord.of(u, v), TensorWord.of(u), 2)


def test_multi_quasisymmetry_detection():
    assert is_multi_quasisymmetric(expand_m(mc([[1, 0], [1, 2]]), 4))
    assert not is_multi_quasisymmetric(series(2, 1, {mono((1, 1, 1)): 1}))
    assert is_multi_quasisymmetric(series_one(2, 1))
    head = head_monomial(ExponentVector.of(1, 0), 2)
    assert head.positions() == (0,)
    with pytest.raises(TruncationError):
        is_multi_quasisymmetric(series(2, 2, {head: 1}))


@settings(max_examples=500, deadline=None, derandomize=True)
@given(tensor_words(3, NAT, 3), tensor_words(3, NAT, 3))
def test_product_realized_over_naturals(w1, w2):
    assert verify_product(w1, w2, 7)


@settings(max_examples=500, deadline=None, derandomize=True)
@given(tensor_words(2, WEAK, 3), tensor_words(2, WEAK, 3))
def test_product_realized_over_weak_exponents(w1, w2):
    assert verify_product(w1, w2, 7)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(compositions(2, NAT, 2), compositions(2, NAT, 2), compositions(2, NAT, 1))
def test_series_mul_is_commutative_and_associative(a, b, c):
    sa, sb, sc = (expand_m(w, 4) for w in (a, b, c))
    assert series_mul(sa, sb) == series_mul(sb, sa)
    assert series_mul(series_mul(sa, sb), sc) == series_mul(sa, series_mul(sb, sc))
    assert is_multi_quasisymmetric(series_mul(sa, sb))
