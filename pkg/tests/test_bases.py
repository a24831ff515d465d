import pytest
from hypothesis import given, settings

from backend.algebra.algebra_core import LinComb
from backend.algebra.bases import (
    FElement,
    MElement,
    f_product,
    f_to_m,
    is_unitriangular,
    m_antipode,
    m_coproduct,
    m_product,
    m_to_f,
    to_f,
    to_m,
    transition_matrix,
)
from backend.algebra.compositions import MultiComposition, nat_compositions
from backend.algebra.errors import InvalidCompositionError
from backend.algebra.exponents import EPSILON, WEAK, ExponentVector
from backend.algebra.hopf import antipode, coproduct
from tests.oracles import as_row_composition, classical_f_to_m, classical_m_to_f, inverse_by_sympy
from tests.strategies import compositions, lincombs


def mc(rows):
    return MultiComposition.from_matrix(rows)


EMPTY = MultiComposition((), 2)
ONE_TWO = mc([[1], [2]])
x = ExponentVector.of(1, 0)
y = ExponentVector.of(0, 1)

ROUND_TRIP = [c for m in (1, 2, 3) for n in range(1, 6) for c in nat_compositions(n, m)]


def test_f_expansion_of_one_two():
    assert f_to_m(ONE_TWO) == MElement(
        {
            mc([[1], [2]]): 1,
            mc([[1, 0], [0, 2]]): 1,
            mc([[1, 0], [1, 1]]): 1,
            mc([[1, 0, 0], [0, 1, 1]]): 1,
        }
    )


def test_top_of_the_order_maps_to_itself():
    top = mc([[1, 0, 0], [0, 1, 1]])
    assert f_to_m(top) == MElement.basis(top)
    assert m_to_f(top) == FElement.basis(top)


def test_trivial_composition_is_the_unit():
    assert f_to_m(EMPTY) == MElement.basis(EMPTY)
    assert m_to_f(EMPTY) == FElement.basis(EMPTY)


def test_classical_two():
    two = mc([[2]])
    one_one = mc([[1, 1]])
    assert f_to_m(two) == MElement({two: 1, one_one: 1})
    assert m_to_f(two) == FElement({two: 1, one_one: -1})


def test_weak_keys_are_rejected():
    weak = MultiComposition.from_matrix([[1], [EPSILON]], WEAK)
    with pytest.raises(InvalidCompositionError):
        f_to_m(weak)
    with pytest.raises(InvalidCompositionError):
        m_to_f(weak)


def test_conversions_check_their_basis():
    with pytest.raises(TypeError):
        to_m(MElement.basis(ONE_TWO))
    with pytest.raises(TypeError):
        to_f(FElement.basis(ONE_TWO))
    with pytest.raises(TypeError):
        m_product(FElement.basis(ONE_TWO), MElement.basis(ONE_TWO))


@pytest.mark.parametrize("c", ROUND_TRIP, ids=lambda c: c.serialize())
def test_basis_change_round_trips(c):
    assert to_m(m_to_f(c)) == MElement.basis(c)
    assert to_f(f_to_m(c)) == FElement.basis(c)


@pytest.mark.parametrize("n, m", [(1, 1), (3, 1), (5, 1), (1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (4, 3)])
def test_transition_matrix_is_unitriangular(n, m):
    df = transition_matrix(n, m)
    assert df.shape == (len(nat_compositions(n, m)),) * 2
    assert df.index.name == "F"
    assert df.columns.name == "M"
    assert is_unitriangular(df)


@pytest.mark.parametrize("n, m", [(2, 2), (3, 2), (2, 3)])
def test_m_to_f_matches_matrix_inverse(n, m):
    df = transition_matrix(n, m)
    by_label = {c.serialize(): c for c in df.attrs["compositions"]}
    inverse = inverse_by_sympy(df)
    for label, row in inverse.items():
        expected = FElement({by_label[col]: value for col, value in row.items()})
        assert m_to_f(by_label[label]) == expected


def test_transition_matrix_rejects_weight_zero():
    with pytest.raises(InvalidCompositionError):
        transition_matrix(0, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_one_row_case_matches_classical_tables(n):
    f_table = classical_f_to_m(n)
    m_table = classical_m_to_f(n)
    for alpha, row in f_table.items():
        expected = MElement({as_row_composition(beta): c for beta, c in row.items()})
        assert f_to_m(as_row_composition(alpha)) == expected
    for alpha, row in m_table.items():
        expected = FElement({as_row_composition(beta): c for beta, c in row.items()})
        assert m_to_f(as_row_composition(alpha)) == expected


def test_m_product_examples():
    w = mc([[1, 0], [2, 1]])
    assert m_product(MElement.basis(EMPTY), MElement.basis(w)) == MElement.basis(w)
    got = m_product(MElement.basis(MultiComposition.of(x)), MElement.basis(MultiComposition.of(y)))
    assert got == MElement(
        {
            MultiComposition.of(x, y): 1,
            MultiComposition.of(y, x): 1,
            MultiComposition.of(x * y): 1,
        }
    )
    assert type(got) is MElement


def test_f_product_examples():
    one = mc([[1]])
    assert f_product(FElement.basis(one), FElement.basis(one)) == FElement(
        {mc([[2]]): 1, mc([[1, 1]]): 1}
    )
    fx = FElement.basis(MultiComposition.of(x))
    fy = FElement.basis(MultiComposition.of(y))
    assert f_product(fx, fy) == FElement({MultiComposition.of(y, x): 1, MultiComposition.of(x * y): 1})
    assert f_product(FElement.basis(EMPTY), FElement.basis(ONE_TWO)) == FElement.basis(ONE_TWO)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(compositions(2, max_len=2), compositions(2, max_len=2))
def test_f_product_is_conjugated_m_product(a, b):
    fa, fb = FElement.basis(a), FElement.basis(b)
    product = f_product(fa, fb)
    assert to_m(product) == m_product(to_m(fa), to_m(fb))
    assert all(c.denominator == 1 for c in product.values())


@settings(max_examples=200, deadline=None, derandomize=True)
@given(
    lincombs(compositions(2, max_len=2), cls=MElement),
    lincombs(compositions(2, max_len=2), cls=MElement),
    lincombs(compositions(2, max_len=1), cls=MElement),
)
def test_m_product_is_commutative_and_associative(a, b, c):
    assert m_product(a, b) == m_product(b, a)
    assert m_product(m_product(a, b), c) == m_product(a, m_product(b, c))


def test_m_coproduct_and_antipode():
    w = mc([[1, 0], [0, 2]])
    assert m_coproduct(MElement.basis(w)) == coproduct(w)
    s = m_antipode(MElement.basis(w))
    assert type(s) is MElement
    assert s == MElement(antipode(w))
    assert isinstance(m_coproduct(MElement({w: 2})), LinComb)
