"""
Monomial and fundamental bases of MQSym over N.

F_c is the sum of M_{c'} over all refinements c' of c. The interval above a
composition w is a Boolean lattice on [|w| - 1] minus Des(w), so the inverse
change of basis is the signed sum

    M_w = sum over Des(w) <= Z of (-1)^(|Z| - |Des(w)|) F_{refine(w, Z)}.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import List

import numpy as np
import pandas as pd

from backend.algebra.algebra_core import LinComb, linear_extend
from backend.algebra.compositions import (
    MultiComposition,
    des,
    leq,
    nat_compositions,
    refine,
    refinements,
    size,
)
from backend.algebra.errors import InvalidCompositionError
from backend.algebra.exponents import NAT
from backend.algebra.hopf import antipode_lincomb, coproduct_lincomb
from backend.algebra.quasi_shuffle import qshuffle_lincomb

logger = logging.getLogger(__name__)


class MElement(LinComb):
    """An element of MQSym written in the monomial basis."""

    __slots__ = ()
    basis_name = "M"


class FElement(LinComb):
    """An element of MQSym written in the fundamental basis."""

    __slots__ = ()
    basis_name = "F"


def _require_nat_key(c: MultiComposition) -> None:
    if c.monoid is not NAT:
        raise InvalidCompositionError("the fundamental basis is defined only over N")


def _require(x: LinComb, kind: type) -> None:
    if not isinstance(x, kind):
        raise TypeError(f"expected {kind.__name__}, got {type(x).__name__}")


# ============================================================
#  BASIS CHANGE
# ============================================================


def f_to_m(c: MultiComposition) -> MElement:
    """F_c in the M basis; F of the trivial composition is M of it (both are 1)."""
    _require_nat_key(c)
    if c.is_empty():
        return MElement.basis(c)
    return MElement({r: 1 for r in refinements(c)})


def m_to_f(w: MultiComposition) -> FElement:
    _require_nat_key(w)
    if w.is_empty():
        return FElement.basis(w)
    current = set(des(w))
    free = [z for z in range(1, size(w)) if z not in current]
    terms = {}
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            terms[refine(w, current.union(extra))] = (-1) ** r
    return FElement(terms)


def to_m(x: FElement) -> MElement:
    _require(x, FElement)
    return linear_extend(f_to_m, x, result=MElement)


def to_f(x: MElement) -> FElement:
    _require(x, MElement)
    return linear_extend(m_to_f, x, result=FElement)


# ============================================================
#  PRODUCTS AND HOPF STRUCTURE
# ============================================================


def m_product(a: MElement, b: MElement) -> MElement:
    """Quasi-shuffle product of the index words, read in the M basis."""
    _require(a, MElement)
    _require(b, MElement)
    return qshuffle_lincomb(a, b)


def f_product(a: FElement, b: FElement) -> FElement:
    """Product in the F basis, computed through the M basis."""
    _require(a, FElement)
    _require(b, FElement)
    return to_f(m_product(to_m(a), to_m(b)))


def m_coproduct(x: MElement) -> LinComb:
    """Delta(M_w) = sum of M_{w1} (x) M_{w2} over deconcatenations w = w1 w2."""
    _require(x, MElement)
    return coproduct_lincomb(x)


def m_antipode(x: MElement) -> MElement:
    _require(x, MElement)
    return antipode_lincomb(x)


# ============================================================
#  TRANSITION MATRICES
# ============================================================


def transition_matrix(n: int, m: int) -> pd.DataFrame:
    """
    The F -> M transition matrix on the [m]-compositions of n.

    Parameters:
    n : int
        Total weight, at least 1.
    m : int
        Alphabet size.

    Returns:
    pd.DataFrame
        Row ``F`` label c, column ``M`` label c', entry the coefficient of
        M_{c'} in F_c. Rows and columns follow canonical order; the
        compositions themselves are kept in ``df.attrs["compositions"]``.
    """
    if n < 1:
        raise InvalidCompositionError("transition matrices start at weight 1")
    comps: List[MultiComposition] = nat_compositions(n, m)
    position = {c: i for i, c in enumerate(comps)}
    matrix = np.zeros((len(comps), len(comps)), dtype=np.int64)
    for i, c in enumerate(comps):
        for r, coeff in f_to_m(c).items():
            matrix[i, position[r]] = int(coeff)
    labels = [c.serialize() for c in comps]
    df = pd.DataFrame(matrix, index=pd.Index(labels, name="F"), columns=pd.Index(labels, name="M"))
    df.attrs["compositions"] = comps
    logger.debug("transition matrix for n=%d, m=%d has size %d", n, m, len(comps))
    return df


def is_unitriangular(df: pd.DataFrame) -> bool:
    """Unit diagonal, upper triangular, and support only at c <= c'."""
    comps = df.attrs["compositions"]
    values = df.to_numpy()
    if not np.array_equal(np.diag(values), np.ones(len(comps), dtype=values.dtype)):
        return False
    if not np.array_equal(values, np.triu(values)):
        return False
    rows, cols = np.nonzero(values)
    return all(leq(comps[i], comps[j]) for i, j in zip(rows, cols))
