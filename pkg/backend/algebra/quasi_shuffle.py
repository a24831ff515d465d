"""
Tensor words and the quasi-shuffle product.

A ``TensorWord`` is a pure tensor a_1 (x) ... (x) a_n over the monoid algebra
of exponent vectors; the empty word is the unit. The product of two letters
is a parameter (``dot``), so the same engine serves multi-compositions over
k[m]^E and tensor words over k[Y].
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, Tuple

from backend.algebra.algebra_core import LinComb, lincomb_bilinear_extend
from backend.algebra.errors import DimensionMismatchError
from backend.algebra.exponents import (
    NAT,
    ExponentMonoid,
    ExponentVector,
    ev_product,
    rows_from_vectors,
)

logger = logging.getLogger(__name__)

Dot = Callable[[ExponentVector, ExponentVector], ExponentVector]


@dataclass(frozen=True)
class TensorWord:
    """
    A finite sequence of exponent vectors of a common length m.

    Letters may be the zero vector (the monomial 1 of k[Y]);
    ``MultiComposition`` narrows this to nonzero letters.
    """

    letters: Tuple[ExponentVector, ...]
    m: int
    monoid: ExponentMonoid = NAT

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.m < 1:
            raise DimensionMismatchError("alphabet size m must be positive")
        for letter in self.letters:
            if letter.m != self.m:
                raise DimensionMismatchError(
                    f"letter {letter.serialize()} has length {letter.m}, expected {self.m}"
                )
            if letter.monoid is not self.monoid:
                raise DimensionMismatchError(
                    f"letter {letter.serialize()} is over {letter.monoid.name}, expected {self.monoid.name}"
                )

    @classmethod
    def empty(cls, m: int, monoid: ExponentMonoid = NAT):
        return cls((), m, monoid)

    @classmethod
    def of(cls, *letters: ExponentVector):
        if not letters:
            raise DimensionMismatchError("use empty(m, monoid) for the empty word")
        return cls(tuple(letters), letters[0].m, letters[0].monoid)

    def with_letters(self, letters) -> "TensorWord":
        """A word of the same class, alphabet and monoid with new letters."""
        return type(self)(tuple(letters), self.m, self.monoid)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return self.with_letters(self.letters[index])
        return self.letters[index]

    @property
    def length(self) -> int:
        return len(self.letters)

    def is_empty(self) -> bool:
        return not self.letters

    def to_matrix(self):
        return rows_from_vectors(self.letters, self.m)

    def serialize(self) -> str:
        """Parenthesized letters, e.g. ``([1,0],[e,2])``; ``()`` is the unit."""
        return "(" + ",".join(letter.serialize() for letter in self.letters) + ")"

    def sort_key(self):
        return (len(self.letters), tuple(letter.sort_key() for letter in self.letters))

    def __repr__(self) -> str:
        return self.serialize()


def check_compatible(a: TensorWord, b: TensorWord) -> None:
    if a.m != b.m:
        raise DimensionMismatchError(f"alphabet sizes differ: {a.m} vs {b.m}")
    if a.monoid is not b.monoid:
        raise DimensionMismatchError(
            f"exponent monoids differ: {a.monoid.name} vs {b.monoid.name}"
        )


def concat(a: TensorWord, b: TensorWord) -> TensorWord:
    check_compatible(a, b)
    return a.with_letters(a.letters + b.letters)


def word_length(a: TensorWord) -> int:
    return len(a.letters)


# ============================================================
#  QUASI-SHUFFLE PRODUCT
# ============================================================


def qshuffle(a: TensorWord, b: TensorWord, dot: Dot = ev_product) -> LinComb:
    """
    Quasi-shuffle product of two tensor words.

    (a (x) a') * (b (x) b') = a (x) (a' * (b (x) b'))
                            + b (x) ((a (x) a') * b')
                            + (a.b) (x) (a' * b'),
    with the empty word as unit. Suffix products are memoized for the
    duration of this call only.

    Parameters:
    a, b : TensorWord
        Words over the same alphabet and monoid.
    dot : callable, optional
        Commutative product of two letters (default: exponent-vector product).

    Returns:
    LinComb
        Words of the same class as ``a`` with positive integer coefficients.
    """
    check_compatible(a, b)
    x, y = a.letters, b.letters

    @lru_cache(maxsize=None)
    def suffix(i: int, j: int) -> Dict[Tuple[ExponentVector, ...], int]:
        if i == len(x):
            return {y[j:]: 1}
        if j == len(y):
            return {x[i:]: 1}
        out: Dict[Tuple[ExponentVector, ...], int] = defaultdict(int)
        for w, c in suffix(i + 1, j).items():
            out[(x[i],) + w] += c
        for w, c in suffix(i, j + 1).items():
            out[(y[j],) + w] += c
        merged = dot(x[i], y[j])
        for w, c in suffix(i + 1, j + 1).items():
            out[(merged,) + w] += c
        return out

    result = LinComb({a.with_letters(w): c for w, c in suffix(0, 0).items()})
    logger.debug("qshuffle %s * %s -> %d terms", a, b, len(result))
    return result


def qshuffle_lincomb(x: LinComb, y: LinComb, dot: Dot = ev_product) -> LinComb:
    return lincomb_bilinear_extend(lambda a, b: qshuffle(a, b, dot), x, y)


def quasi_shuffle_count(p: int, q: int) -> int:
    """Number of quasi-shuffles of a length-p word with a length-q word."""
    return sum(
        factorial(k) // (factorial(k - p) * factorial(k - q) * factorial(p + q - k))
        for k in range(max(p, q), p + q + 1)
    )

