"""
The free commutative Rota-Baxter algebra of weight 1 on Y = {y_1, ..., y_m}
and its realization inside the weak multi-quasisymmetric functions.

``RBWord`` is a basis element w_0 (x) (w_1 (x) ... (x) w_n) of
k[Y] (x) Sha+(k[Y]): the head is a k[Y] monomial, the tail a tensor word over
k[Y] monomials (the zero vector is the monomial 1). The product multiplies
heads and quasi-shuffles tails; the operator P pushes the head into the tail
and leaves 1 in front.

``SQSymWord`` indexes x_{w,0} M_w in the scalar extension of WMQSym: the head
and every tail letter are weak vectors with all slots in P u {eps}. Replacing
eps by 0 everywhere (``iso_f``) identifies the two algebras together with
their operators.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Dict, Tuple

from backend.algebra.algebra_core import LinComb, lincomb_bilinear_extend, linear_extend
from backend.algebra.compositions import MultiComposition
from backend.algebra.errors import DimensionMismatchError, InvalidExponentError, TruncationError
from backend.algebra.exponents import (
    NAT,
    WEAK,
    ExponentVector,
    epsilon_vector,
    ev_product,
    ev_theta,
    ev_theta_inverse,
    is_weak_letter,
    unit_vector,
    zero_vector,
)
from backend.algebra.hopf import antipode, coproduct
from backend.algebra.quasi_shuffle import TensorWord, qshuffle
from backend.algebra.realization import (
    TruncatedSeries,
    expand_m,
    head_monomial,
    series_mul,
    series_scale,
)

logger = logging.getLogger(__name__)


# ============================================================
#  BASIS WORDS
# ============================================================


@dataclass(frozen=True)
class RBWord:
    """A basis word (w_0; w_1, ..., w_n) of Sha(k[Y])."""

    head: ExponentVector
    tail: TensorWord

    def __post_init__(self):
        if self.head.monoid is not NAT or self.tail.monoid is not NAT:
            raise InvalidExponentError("Rota-Baxter words use exponents in N")
        if self.head.m != self.tail.m:
            raise DimensionMismatchError(
                f"head has m={self.head.m} but tail has m={self.tail.m}"
            )

    @property
    def m(self) -> int:
        return self.head.m

    def serialize(self) -> str:
        return f"{self.head.serialize()} | {self.tail.serialize()}"

    def sort_key(self):
        return (len(self.tail.letters), self.head.sort_key(), self.tail.sort_key())

    def __repr__(self) -> str:
        return self.serialize()


@dataclass(frozen=True)
class SQSymWord:
    """The index (w, w_1, ..., w_n) of x_{w,0} M_{(w_1, ..., w_n)}."""

    head: ExponentVector
    tail: MultiComposition

    def __post_init__(self):
        if self.tail.monoid is not WEAK:
            raise InvalidExponentError("the tail of a weak word is over N u {e}")
        if self.head.m != self.tail.m:
            raise DimensionMismatchError(
                f"head has m={self.head.m} but tail has m={self.tail.m}"
            )
        for letter in (self.head,) + self.tail.letters:
            if not is_weak_letter(letter):
                raise InvalidExponentError(
                    f"{letter.serialize()} has a zero slot; weak letters take values in P u {{e}}"
                )

    @property
    def m(self) -> int:
        return self.head.m

    def serialize(self) -> str:
        return f"{self.head.serialize()} | {TensorWord.serialize(self.tail)}"

    def sort_key(self):
        return (len(self.tail.letters), self.head.sort_key(), self.tail.sort_key())

    def __repr__(self) -> str:
        return self.serialize()


def rb_unit(m: int) -> RBWord:
    return RBWord(zero_vector(m, NAT), TensorWord.empty(m, NAT))


def rb_generator(i: int, m: int) -> RBWord:
    """y_i as the word (y_i; )."""
    return RBWord(unit_vector(i, m, NAT), TensorWord.empty(m, NAT))


def sqsym_unit(m: int) -> SQSymWord:
    return SQSymWord(epsilon_vector(m), MultiComposition((), m, WEAK))


def sqsym_generator(i: int, m: int) -> SQSymWord:
    """The preimage of y_i: slot i is 1, every other slot eps."""
    return SQSymWord(ev_theta_inverse(unit_vector(i, m, NAT)), MultiComposition((), m, WEAK))


# ============================================================
#  ROTA-BAXTER ALGEBRA
# ============================================================


def diamond(a: RBWord, b: RBWord) -> LinComb:
    """Heads multiply in k[Y], tails quasi-shuffle."""
    head = ev_product(a.head, b.head)
    return LinComb({RBWord(head, t): c for t, c in qshuffle(a.tail, b.tail).items()})


def diamond_lincomb(x: LinComb, y: LinComb) -> LinComb:
    return lincomb_bilinear_extend(diamond, x, y)


def _push_head(word: RBWord) -> LinComb:
    tail = word.tail.with_letters((word.head,) + word.tail.letters)
    return LinComb.basis(RBWord(zero_vector(word.m, NAT), tail))


def rb_operator(x: LinComb) -> LinComb:
    """P(w_0; w) = (1; w_0, w)."""
    return linear_extend(_push_head, x)


def check_rb_identity(x: LinComb, y: LinComb) -> bool:
    """P(x)P(y) == P(xP(y)) + P(P(x)y) + P(xy)."""
    px, py = rb_operator(x), rb_operator(y)
    lhs = diamond_lincomb(px, py)
    rhs = (
        rb_operator(diamond_lincomb(x, py))
        + rb_operator(diamond_lincomb(px, y))
        + rb_operator(diamond_lincomb(x, y))
    )
    return lhs == rhs


# ============================================================
#  WEAK SCALAR EXTENSION
# ============================================================


def sqsym_product(a: SQSymWord, b: SQSymWord) -> LinComb:
    head = ev_product(a.head, b.head)
    return LinComb({SQSymWord(head, t): c for t, c in qshuffle(a.tail, b.tail).items()})


def sqsym_product_lincomb(x: LinComb, y: LinComb) -> LinComb:
    return lincomb_bilinear_extend(sqsym_product, x, y)


def _push_weak_head(word: SQSymWord) -> LinComb:
    tail = word.tail.with_letters((word.head,) + word.tail.letters)
    return LinComb.basis(SQSymWord(epsilon_vector(word.m), tail))


def sqsym_operator(x: LinComb) -> LinComb:
    """x_{w,0} M_w maps to x_{eps,0} M_{(w, w_1, ..., w_n)}."""
    return linear_extend(_push_weak_head, x)


def iso_f(a: SQSymWord) -> RBWord:
    """Apply theta to the head and to every tail letter."""
    tail = TensorWord(tuple(ev_theta(letter) for letter in a.tail.letters), a.m, NAT)
    return RBWord(ev_theta(a.head), tail)


def iso_f_inverse(r: RBWord) -> SQSymWord:
    tail = MultiComposition(tuple(ev_theta_inverse(letter) for letter in r.tail.letters), r.m, WEAK)
    return SQSymWord(ev_theta_inverse(r.head), tail)


def iso_f_lincomb(x: LinComb) -> LinComb:
    return linear_extend(lambda w: LinComb.basis(iso_f(w)), x)


def check_iso(a: SQSymWord, b: SQSymWord) -> bool:
    """f(ab) == f(a) f(b), and f(P(a)) == P(f(a)) for both arguments."""
    multiplicative = iso_f_lincomb(sqsym_product(a, b)) == diamond(iso_f(a), iso_f(b))
    intertwines = all(
        iso_f_lincomb(sqsym_operator(LinComb.basis(w))) == rb_operator(LinComb.basis(iso_f(w)))
        for w in (a, b)
    )
    return multiplicative and intertwines


# ============================================================
#  HOPF STRUCTURE
# ============================================================

# Head factor: k[Y] with every y_i primitive, moved across theta.


def _head_coproduct(head: ExponentVector) -> Dict[Tuple[ExponentVector, ExponentVector], int]:
    a = ev_theta(head).exps
    out = {}
    for b in product(*(range(e + 1) for e in a)):
        coeff = 1
        for ai, bi in zip(a, b):
            coeff *= comb(ai, bi)
        rest = tuple(ai - bi for ai, bi in zip(a, b))
        out[(ev_theta_inverse(ExponentVector(b, NAT)), ev_theta_inverse(ExponentVector(rest, NAT)))] = coeff
    return out


def sqsym_coproduct(a: SQSymWord) -> LinComb:
    acc: Dict[Tuple[SQSymWord, SQSymWord], int] = defaultdict(int)
    tail_terms = coproduct(a.tail).items()
    for (h1, h2), ch in _head_coproduct(a.head).items():
        for (t1, t2), ct in tail_terms:
            acc[(SQSymWord(h1, t1), SQSymWord(h2, t2))] += ch * ct
    return LinComb(acc)


def sqsym_counit(a: SQSymWord) -> Fraction:
    unit = sqsym_unit(a.m)
    return Fraction(1) if a == unit else Fraction(0)


def sqsym_antipode(a: SQSymWord) -> LinComb:
    """S(y^a) = (-1)^|a| y^a on the head, the tail antipode on the tail."""
    sign = -1 if sum(ev_theta(a.head).exps) % 2 else 1
    return LinComb({SQSymWord(a.head, t): sign * c for t, c in antipode(a.tail).items()})


def sqsym_antipode_lincomb(x: LinComb) -> LinComb:
    return linear_extend(sqsym_antipode, x)


def check_sqsym_antipode(a: SQSymWord) -> bool:
    target = LinComb.basis(sqsym_unit(a.m), sqsym_counit(a))
    left, right = LinComb(), LinComb()
    for (u, v), c in sqsym_coproduct(a).items():
        left = left + sqsym_product_lincomb(sqsym_antipode(u), LinComb.basis(v)) * c
        right = right + sqsym_product_lincomb(LinComb.basis(u), sqsym_antipode(v)) * c
    return left == target and right == target


def check_sqsym_bialgebra(a: SQSymWord, b: SQSymWord) -> bool:
    """Delta(ab) == Delta(a) Delta(b) with the componentwise product."""
    lhs = linear_extend(sqsym_coproduct, sqsym_product(a, b))
    acc: Dict[Tuple[SQSymWord, SQSymWord], Fraction] = defaultdict(Fraction)
    for (a1, a2), ca in sqsym_coproduct(a).items():
        for (b1, b2), cb in sqsym_coproduct(b).items():
            for u, cu in sqsym_product(a1, b1).items():
                for v, cv in sqsym_product(a2, b2).items():
                    acc[(u, v)] += ca * cb * cu * cv
    return lhs == LinComb(acc)


# ============================================================
#  SERIES REALIZATION
# ============================================================


def sqsym_series(a: SQSymWord, N: int) -> TruncatedSeries:
    """x_{w,0} times M_w truncated at N, over the weak monoid."""
    head = TruncatedSeries(N, a.m, WEAK, LinComb.basis(head_monomial(a.head, N)))
    return series_mul(head, expand_m(a.tail, N))


def verify_sqsym_product(a: SQSymWord, b: SQSymWord, N: int) -> bool:
    needed = len(a.tail.letters) + len(b.tail.letters)
    if N < needed:
        raise TruncationError(f"N={N} is below the combined tail length {needed}")
    lhs = series_mul(sqsym_series(a, N), sqsym_series(b, N))
    rhs = TruncatedSeries(N, a.m, WEAK)
    for w, c in sqsym_product(a, b).items():
        rhs = rhs + series_scale(c, sqsym_series(w, N))
    logger.debug("sqsym product %s * %s checked at N=%d", a, b, N)
    return lhs == rhs
