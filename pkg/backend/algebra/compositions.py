"""
Multi-compositions, descent sets, letter locations and the refinement order.

A multi-composition is an m x k matrix with no zero column; its columns are
the letters of a tensor word. Over E = N the columns can be read as a word in
the letters 1..m (column by column, rows top to bottom, row l repeated a_{l,i}
times), which gives the location function g_c and the descent set Des(c).
Breaking a column between two consecutive letters generates the refinement
order; c <= c' holds exactly when g_c = g_{c'} and Des(c) is contained in
Des(c').

Des, g, refine and the order are defined over N only.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import chain, combinations, product
from typing import Iterable, Iterator, List, Sequence, Tuple

from backend.algebra.errors import (
    DimensionMismatchError,
    InvalidCompositionError,
    InvalidRefinementError,
)
from backend.algebra.exponents import (
    NAT,
    ExponentMonoid,
    ExponentVector,
    ev_is_zero,
    rows_from_vectors,
    vectors_from_rows,
)
from backend.algebra.quasi_shuffle import TensorWord

logger = logging.getLogger(__name__)

Composition = Tuple[int, ...]


@dataclass(frozen=True, repr=False)
class MultiComposition(TensorWord):
    """A tensor word whose letters are all nonzero exponent vectors."""

    def __post_init__(self):
        super().__post_init__()
        for i, column in enumerate(self.letters, start=1):
            if ev_is_zero(column):
                raise InvalidCompositionError(f"column {i} of a multi-composition is zero")

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence], monoid: ExponentMonoid = NAT) -> "MultiComposition":
        """Build from a row-major matrix; m empty rows give the trivial composition."""
        if not rows:
            raise DimensionMismatchError("a matrix needs at least one row")
        if all(len(r) == 0 for r in rows):
            return cls((), len(rows), monoid)
        return cls(vectors_from_rows(rows, monoid), len(rows), monoid)

    @property
    def columns(self) -> Tuple[ExponentVector, ...]:
        return self.letters

    def to_matrix(self) -> List[list]:
        return rows_from_vectors(self.letters, self.m)

    def serialize(self) -> str:
        """Row-major matrix text ``[[a11,...,a1k],...,[am1,...,amk]]``."""
        rows = self.to_matrix()
        return "[" + ",".join(
            "[" + ",".join(self.monoid.serialize(e) for e in row) + "]" for row in rows
        ) + "]"

    def __repr__(self) -> str:
        return self.serialize()


def _require_nat(c: MultiComposition, what: str) -> None:
    if c.monoid is not NAT:
        raise InvalidCompositionError(f"{what} is defined only for compositions over N")


def _require_nonempty(c: MultiComposition, what: str) -> None:
    if not c.letters:
        raise InvalidCompositionError(f"{what} is undefined on the trivial composition")


# ============================================================
#  STATISTICS
# ============================================================


def col_weight(c: MultiComposition, i: int) -> int:
    """|c_i|, the sum of the entries of column i (1-based)."""
    _require_nat(c, "column weight")
    if not 1 <= i <= len(c.letters):
        raise InvalidCompositionError(f"column index {i} outside [1, {len(c.letters)}]")
    return c.letters[i - 1].weight()


def size(c: MultiComposition) -> int:
    """|c|, the total weight."""
    _require_nat(c, "size")
    return sum(column.weight() for column in c.letters)


def des(c: MultiComposition) -> Tuple[int, ...]:
    """Partial sums of the column weights, excluding the total."""
    _require_nat(c, "Des")
    _require_nonempty(c, "Des")
    sums, running = [], 0
    for column in c.letters[:-1]:
        running += column.weight()
        sums.append(running)
    return tuple(sums)


def g_fn(c: MultiComposition) -> Tuple[int, ...]:
    """The row index of each letter, reading columns left to right, rows top to bottom."""
    _require_nat(c, "g")
    if size(c) < 1:
        raise InvalidCompositionError("g is undefined on the trivial composition")
    return tuple(
        row
        for column in c.letters
        for row, a in enumerate(column.exps, start=1)
        for _ in range(a)
    )


def _column_from_rows(rows: Iterable[int], m: int) -> ExponentVector:
    counts = [0] * m
    for row in rows:
        counts[row - 1] += 1
    return ExponentVector(tuple(counts), NAT)


def from_locations(g: Sequence[int], descents: Iterable[int], m: int) -> MultiComposition:
    """The unique composition with the given location function and descent set."""
    n = len(g)
    cuts = sorted(set(descents))
    if any(not 1 <= z <= n - 1 for z in cuts):
        raise InvalidRefinementError(f"descent set {cuts} is not inside [1, {n - 1}]")
    bounds = [0] + cuts + [n]
    columns = tuple(_column_from_rows(g[lo:hi], m) for lo, hi in zip(bounds, bounds[1:]))
    return MultiComposition(columns, m, NAT)


def refine(c: MultiComposition, z: Iterable[int]) -> MultiComposition:
    """
    The refinement of c with descent set Z.

    Requires Des(c) <= Z <= [|c| - 1]; the result keeps g_c and has Des = Z.
    """
    z = set(z)
    n = size(c)
    current = set(des(c))
    if not current <= z:
        raise InvalidRefinementError(f"{sorted(z)} does not contain Des(c) = {sorted(current)}")
    if any(not 1 <= x <= n - 1 for x in z):
        raise InvalidRefinementError(f"{sorted(z)} is not inside [1, {n - 1}]")
    return from_locations(g_fn(c), z, c.m)


def _subsets(items: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def refinements(c: MultiComposition) -> List[MultiComposition]:
    """All c' with c <= c', in canonical order; there are 2^(|c| - 1 - |Des(c)|)."""
    current = set(des(c))
    g = g_fn(c)
    free = [x for x in range(1, len(g)) if x not in current]
    found = [from_locations(g, current.union(extra), c.m) for extra in _subsets(free)]
    logger.debug("%s has %d refinements", c, len(found))
    return sorted(found, key=lambda w: w.sort_key())


def leq(c: MultiComposition, c2: MultiComposition) -> bool:
    """The reflexive refinement order."""
    if c.m != c2.m or c.monoid is not NAT or c2.monoid is not NAT:
        return False
    if not c.letters or not c2.letters:
        return not c.letters and not c2.letters
    if size(c) != size(c2) or g_fn(c) != g_fn(c2):
        return False
    return set(des(c)) <= set(des(c2))


def lt(c: MultiComposition, c2: MultiComposition) -> bool:
    """The strict refinement order."""
    return leq(c, c2) and c != c2


def breakings(c: MultiComposition) -> List[MultiComposition]:
    """One-step refinements: split one column between two consecutive letters."""
    _require_nat(c, "column breaking")
    result = []
    for i, column in enumerate(c.letters):
        rows = [row for row, a in enumerate(column.exps, start=1) for _ in range(a)]
        for cut in range(1, len(rows)):
            left = _column_from_rows(rows[:cut], c.m)
            right = _column_from_rows(rows[cut:], c.m)
            result.append(c.with_letters(c.letters[:i] + (left, right) + c.letters[i + 1:]))
    return result


# ============================================================
#  ENUMERATION
# ============================================================


def integer_compositions(n: int) -> List[Composition]:
    """All compositions L of n, lexicographic in their part sequences."""
    if n < 0:
        raise InvalidCompositionError(f"cannot compose a negative integer {n}")
    if n == 0:
        return [()]
    found = []
    for cuts in _subsets(range(1, n)):
        bounds = (0,) + cuts + (n,)
        found.append(tuple(b - a for a, b in zip(bounds, bounds[1:])))
    return sorted(found)


def weak_compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Tuples of ``parts`` nonnegative integers summing to ``total``."""
    if parts < 1:
        raise DimensionMismatchError(f"need at least one part, got {parts}")
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def nat_compositions(n: int, m: int) -> List[MultiComposition]:
    """Every [m]-composition of n, in canonical order."""
    if m < 1:
        raise DimensionMismatchError(f"alphabet size must be at least 1, got m={m}")
    if n == 0:
        return [MultiComposition((), m, NAT)]
    found = []
    for weights in integer_compositions(n):
        choices = [
            [ExponentVector(v, NAT) for v in weak_compositions(w, m)] for w in weights
        ]
        for columns in product(*choices):
            found.append(MultiComposition(columns, m, NAT))
    return sorted(found, key=lambda w: w.sort_key())
