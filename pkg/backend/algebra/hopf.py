"""
Hopf structure on the quasi-shuffle algebra of tensor words.

Coproduct is deconcatenation, the counit picks out the empty word, and the
antipode has the closed form

    S(a) = (-1)^l(a) * sum over compositions L of l(a) of L o a^r

where a^r is the reversal and L o a multiplies the letters of a blockwise.
``antipode_by_recursion`` computes S by inverting the identity under
convolution instead and is kept as an independent check of the closed form.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, Sequence, Tuple

from backend.algebra.algebra_core import LinComb, linear_extend
from backend.algebra.compositions import integer_compositions
from backend.algebra.errors import InvalidRefinementError
from backend.algebra.exponents import ev_product, is_weak_letter
from backend.algebra.quasi_shuffle import Dot, TensorWord, qshuffle, qshuffle_lincomb

logger = logging.getLogger(__name__)

WordPair = Tuple[TensorWord, TensorWord]


def _unit_like(a: TensorWord) -> TensorWord:
    return a.with_letters(())


# ============================================================
#  COPRODUCT AND COUNIT
# ============================================================


def coproduct(a: TensorWord) -> LinComb:
    """Deconcatenation: sum of (a_1..a_i) (x) (a_{i+1}..a_n) for i = 0..n."""
    return LinComb({(a[:i], a[i:]): 1 for i in range(len(a.letters) + 1)})


def counit(a: TensorWord) -> Fraction:
    return Fraction(1) if a.is_empty() else Fraction(0)


def coproduct_lincomb(x: LinComb) -> LinComb:
    return linear_extend(coproduct, x)


def counit_lincomb(x: LinComb) -> Fraction:
    return sum((c * counit(w) for w, c in x.items()), Fraction(0))


def tensor_qshuffle(x: LinComb, y: LinComb, dot: Dot = ev_product) -> LinComb:
    """Componentwise quasi-shuffle on the tensor square."""
    acc: Dict[WordPair, Fraction] = defaultdict(Fraction)
    for (a1, a2), ca in x.items():
        for (b1, b2), cb in y.items():
            left = qshuffle(a1, b1, dot)
            right = qshuffle(a2, b2, dot)
            for u, cu in left.items():
                for v, cv in right.items():
                    acc[(u, v)] += ca * cb * cu * cv
    return LinComb(acc)


# ============================================================
#  REVERSAL, BLOCK PRODUCTS AND THE ANTIPODE
# ============================================================


def reversal(a: TensorWord) -> TensorWord:
    return a.with_letters(reversed(a.letters))


def l_compose(parts: Sequence[int], a: TensorWord, dot: Dot = ev_product) -> TensorWord:
    """
    Divide the letters of ``a`` into consecutive blocks of sizes ``parts``
    and multiply each block into a single letter.
    """
    if any(p < 1 for p in parts):
        raise InvalidRefinementError(f"composition {tuple(parts)} has a nonpositive part")
    if sum(parts) != len(a.letters):
        raise InvalidRefinementError(
            f"composition {tuple(parts)} does not sum to the word length {len(a.letters)}"
        )
    letters, start = [], 0
    for p in parts:
        letters.append(reduce(dot, a.letters[start:start + p]))
        start += p
    return a.with_letters(letters)


def antipode(a: TensorWord, dot: Dot = ev_product) -> LinComb:
    """Closed-form antipode; S of the empty word is the empty word."""
    n = len(a.letters)
    sign = -1 if n % 2 else 1
    rev = reversal(a)
    acc: Dict[TensorWord, int] = defaultdict(int)
    for parts in integer_compositions(n):
        acc[l_compose(parts, rev, dot)] += sign
    result = LinComb(acc)
    logger.debug("antipode of %s: %d compositions, %d terms", a, 2 ** max(n - 1, 0), len(result))
    return result


def antipode_lincomb(x: LinComb, dot: Dot = ev_product) -> LinComb:
    return linear_extend(lambda w: antipode(w, dot), x, result=type(x))


def antipode_by_recursion(a: TensorWord, dot: Dot = ev_product) -> LinComb:
    """S(a) = -sum_{i<n} S(a_1..a_i) * (a_{i+1}..a_n), with S(empty) = empty."""

    @lru_cache(maxsize=None)
    def prefix(i: int) -> LinComb:
        if i == 0:
            return LinComb.basis(_unit_like(a))
        total = LinComb()
        for k in range(i):
            total = total + qshuffle_lincomb(prefix(k), LinComb.basis(a[k:i]), dot)
        return -total

    return prefix(len(a.letters))


# ============================================================
#  AXIOM CHECKS
# ============================================================


def check_coassociativity(a: TensorWord) -> bool:
    left: Dict[Tuple[TensorWord, ...], Fraction] = defaultdict(Fraction)
    right: Dict[Tuple[TensorWord, ...], Fraction] = defaultdict(Fraction)
    for (u, v), c in coproduct(a).items():
        for (u1, u2), c1 in coproduct(u).items():
            left[(u1, u2, v)] += c * c1
        for (v1, v2), c2 in coproduct(v).items():
            right[(u, v1, v2)] += c * c2
    return LinComb(left) == LinComb(right)


def check_counit(a: TensorWord) -> bool:
    target = LinComb.basis(a)
    left = LinComb({v: c * counit(u) for (u, v), c in coproduct(a).items()})
    right = LinComb({u: c * counit(v) for (u, v), c in coproduct(a).items()})
    return left == target and right == target


def check_bialgebra(a: TensorWord, b: TensorWord, dot: Dot = ev_product) -> bool:
    """Delta(a) * Delta(b) == Delta(a * b)."""
    lhs = tensor_qshuffle(coproduct(a), coproduct(b), dot)
    rhs = coproduct_lincomb(qshuffle(a, b, dot))
    return lhs == rhs


def check_antipode(a: TensorWord, dot: Dot = ev_product) -> bool:
    """
    Both convolution identities S * id = eps = id * S, with S the closed-form
    ``antipode``. ``antipode_by_recursion`` is the independent check on S itself.
    """
    target = LinComb.basis(_unit_like(a), counit(a))
    left, right = LinComb(), LinComb()
    for (u, v), c in coproduct(a).items():
        left = left + qshuffle_lincomb(antipode(u, dot), LinComb.basis(v), dot) * c
        right = right + qshuffle_lincomb(LinComb.basis(u), antipode(v, dot), dot) * c
    return left == target and right == target


def is_weak_word(w: TensorWord) -> bool:
    """True iff every letter has all slots in P u {eps}."""
    return all(is_weak_letter(letter) for letter in w.letters)
