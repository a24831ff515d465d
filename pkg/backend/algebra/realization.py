"""
Truncated power series in the variables x_{i,j} with exponents in E.

Row i ranges over [m] and position j over [0, N]; position 0 holds the head
variables of the scalar extension, every other expansion uses [1, N].
Truncation is by position, never by degree, so for words of total length at
most N every identity about increasing index tuples survives intact.

Variables with exponent eps are kept as explicit factors.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Dict, Iterator, List, Sequence, Tuple

from backend.algebra.algebra_core import LinComb, Scalar, to_rational
from backend.algebra.compositions import MultiComposition, des, g_fn
from backend.algebra.errors import DimensionMismatchError, TruncationError
from backend.algebra.exponents import NAT, ExponentMonoid, ExponentVector, ExtNat
from backend.algebra.quasi_shuffle import TensorWord, qshuffle

logger = logging.getLogger(__name__)

Variable = Tuple[int, int]


@dataclass(frozen=True)
class SeriesMonomial:
    """Product of x_{i,j}^e over a finite set of variables, e never the monoid zero."""

    factors: Tuple[Tuple[Variable, ExtNat], ...]
    monoid: ExponentMonoid = NAT

    def __post_init__(self):
        merged: Dict[Variable, ExtNat] = {}
        for var, e in self.factors:
            merged[var] = self.monoid.add(merged[var], e) if var in merged else e
        kept = tuple(
            sorted(
                ((var, e) for var, e in merged.items() if not self.monoid.is_zero(e)),
                key=lambda item: (item[0][1], item[0][0]),
            )
        )
        object.__setattr__(self, "factors", kept)

    @classmethod
    def one(cls, monoid: ExponentMonoid = NAT) -> "SeriesMonomial":
        return cls((), monoid)

    def positions(self) -> Tuple[int, ...]:
        return tuple(sorted({j for (_, j), _ in self.factors}))

    def max_position(self) -> int:
        return max((j for (_, j), _ in self.factors), default=0)

    def column(self, j: int, m: int) -> ExponentVector:
        """The exponent vector sitting at position j."""
        exps = [self.monoid.zero()] * m
        for (i, pos), e in self.factors:
            if pos == j:
                exps[i - 1] = e
        return ExponentVector(tuple(exps), self.monoid)

    def __mul__(self, other: "SeriesMonomial") -> "SeriesMonomial":
        if self.monoid is not other.monoid:
            raise DimensionMismatchError("monomials over different exponent monoids")
        return SeriesMonomial(self.factors + other.factors, self.monoid)

    def sort_key(self):
        return tuple(((j, i), self.monoid.sort_key(e)) for (i, j), e in self.factors)

    def serialize(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for (i, j), e in self.factors:
            token = f"x[{i},{j}]"
            if e != 1:
                token += "^" + self.monoid.serialize(e)
            parts.append(token)
        return "*".join(parts)

    def __repr__(self) -> str:
        return self.serialize()


@dataclass(frozen=True)
class TruncatedSeries:
    """A power series restricted to positions <= N."""

    N: int
    m: int
    monoid: ExponentMonoid = NAT
    terms: LinComb = field(default_factory=LinComb)

    def __post_init__(self):
        for mono in self.terms:
            if mono.monoid is not self.monoid:
                raise DimensionMismatchError("series monomial over the wrong monoid")
            if mono.max_position() > self.N:
                raise TruncationError(f"monomial {mono} uses a position beyond N={self.N}")
            if any(not 1 <= i <= self.m for (i, _), _ in mono.factors):
                raise DimensionMismatchError(f"monomial {mono} uses a row outside [1, {self.m}]")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, mono: SeriesMonomial) -> Fraction:
        return self.terms.coefficient(mono)

    def serialize(self) -> str:
        """Sum of ``coef*x[i,j]^e`` terms in canonical order; ``0`` when empty."""
        if not self.terms:
            return "0"
        out = []
        for k, (mono, c) in enumerate(self.terms.items()):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            body = mono.serialize()
            if mag != 1:
                body = str(mag) if body == "1" else f"{mag}*{body}"
            if k == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def to_records(self) -> List[dict]:
        return [
            {
                "coefficient": str(c),
                "monomial": [[i, j, self.monoid.serialize(e)] for (i, j), e in mono.factors],
            }
            for mono, c in self.terms.items()
        ]


def _check_level(N: int) -> None:
    if N < 1:
        raise TruncationError(f"truncation level must be at least 1, got {N}")


def _check_compatible(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if (a.N, a.m) != (b.N, b.m) or a.monoid is not b.monoid:
        raise DimensionMismatchError(
            f"series parameters differ: (N={a.N}, m={a.m}, {a.monoid.name}) "
            f"vs (N={b.N}, m={b.m}, {b.monoid.name})"
        )


# ============================================================
#  SERIES ARITHMETIC
# ============================================================


def series_one(N: int, m: int, monoid: ExponentMonoid = NAT) -> TruncatedSeries:
    return TruncatedSeries(N, m, monoid, LinComb.basis(SeriesMonomial.one(monoid)))


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_compatible(a, b)
    return TruncatedSeries(a.N, a.m, a.monoid, a.terms + b.terms)


def series_scale(c: Scalar, a: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(a.N, a.m, a.monoid, a.terms * to_rational(c))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_compatible(a, b)
    acc: Dict[SeriesMonomial, Fraction] = defaultdict(Fraction)
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            acc[ma * mb] += ca * cb
    return TruncatedSeries(a.N, a.m, a.monoid, LinComb(acc))


# ============================================================
#  EXPANSIONS
# ============================================================


def word_monomial(letters: Sequence[ExponentVector], positions: Sequence[int], monoid: ExponentMonoid) -> SeriesMonomial:
    """x^w_j: letter k of w placed at position j_k."""
    factors = [
        ((i, j), e)
        for letter, j in zip(letters, positions)
        for i, e in enumerate(letter.exps, start=1)
    ]
    return SeriesMonomial(tuple(factors), monoid)


def head_monomial(w: ExponentVector, N: int) -> SeriesMonomial:
    """x_{w,0}: the vector w placed at position 0."""
    _check_level(N)
    return word_monomial((w,), (0,), w.monoid)


def expand_m(w: TensorWord, N: int) -> TruncatedSeries:
    """M_w as the sum of x^w_j over strictly increasing j_1 < ... < j_l in [N]."""
    _check_level(N)
    length = len(w.letters)
    if length > N:
        raise TruncationError(f"word of length {length} has no monomials at N={N}")
    terms = {
        word_monomial(w.letters, positions, w.monoid): 1
        for positions in combinations(range(1, N + 1), length)
    }
    logger.debug("expand_m %s at N=%d: %d monomials", w, N, len(terms))
    return TruncatedSeries(N, w.m, w.monoid, LinComb(terms))


def expand_m_lincomb(x: LinComb, N: int, m: int, monoid: ExponentMonoid = NAT) -> TruncatedSeries:
    total = TruncatedSeries(N, m, monoid)
    for w, c in x.items():
        total = total + series_scale(c, expand_m(w, N))
    return total


def _descent_sequences(n: int, descents: frozenset, N: int) -> Iterator[Tuple[int, ...]]:
    """1 <= i_1 <= ... <= i_n <= N with i_k < i_{k+1} whenever k is a descent."""

    def extend(prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        k = len(prefix)
        if k == n:
            yield prefix
            return
        low = 1 if k == 0 else prefix[-1] + (1 if k in descents else 0)
        for i in range(low, N + 1):
            yield from extend(prefix + (i,))

    return extend(())


def expand_f(c: MultiComposition, N: int) -> TruncatedSeries:
    """
    F_c from its descent set and letter locations: the product of
    x_{g(j), i_j} over weakly increasing index sequences that rise strictly
    at every descent.
    """
    _check_level(N)
    if c.is_empty():
        return series_one(N, c.m, NAT)
    g = g_fn(c)
    descents = frozenset(des(c))
    acc: Dict[SeriesMonomial, int] = defaultdict(int)
    for seq in _descent_sequences(len(g), descents, N):
        acc[SeriesMonomial(tuple(((row, i), 1) for row, i in zip(g, seq)), NAT)] += 1
    return TruncatedSeries(N, c.m, NAT, LinComb(acc))


def expand_f_by_letters(c: MultiComposition, N: int) -> TruncatedSeries:
    """
    F_c from the word of letters: positions weakly increase inside each
    column and strictly increase from one column to the next.
    """
    _check_level(N)
    if c.is_empty():
        return series_one(N, c.m, NAT)
    blocks = [
        [row for row, a in enumerate(column.exps, start=1) for _ in range(a)]
        for column in c.letters
    ]
    acc: Dict[SeriesMonomial, int] = defaultdict(int)

    def place(k: int, floor: int, factors: Tuple) -> None:
        if k == len(blocks):
            acc[SeriesMonomial(factors, NAT)] += 1
            return
        rows = blocks[k]
        for chosen in combinations_with_replacement(range(floor, N + 1), len(rows)):
            placed = tuple(((row, j), 1) for row, j in zip(rows, chosen))
            place(k + 1, chosen[-1] + 1, factors + placed)

    place(0, 1, ())
    return TruncatedSeries(N, c.m, NAT, LinComb(acc))


def verify_product(w1: TensorWord, w2: TensorWord, N: int) -> bool:
    """M(w1) M(w2) == M(w1 * w2) as series truncated at N >= l(w1) + l(w2)."""
    needed = len(w1.letters) + len(w2.letters)
    if N < needed:
        raise TruncationError(f"N={N} is below l(w1) + l(w2) = {needed}")
    lhs = series_mul(expand_m(w1, N), expand_m(w2, N))
    rhs = expand_m_lincomb(qshuffle(w1, w2), N, w1.m, w1.monoid)
    return lhs == rhs


def is_multi_quasisymmetric(s: TruncatedSeries) -> bool:
    """
    Every column pattern carries one coefficient across all increasing
    position tuples in [N].
    """
    seen: Dict[Tuple[ExponentVector, ...], Dict[Tuple[int, ...], Fraction]] = defaultdict(dict)
    for mono, c in s.terms.items():
        positions = mono.positions()
        if 0 in positions:
            raise TruncationError("position 0 is reserved for head variables")
        pattern = tuple(mono.column(j, s.m) for j in positions)
        seen[pattern][positions] = c
    for pattern, by_positions in seen.items():
        values = {
            by_positions.get(positions, Fraction(0))
            for positions in combinations(range(1, s.N + 1), len(pattern))
        }
        if len(values) != 1:
            return False
    return True
