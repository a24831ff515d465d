"""
Exponent monoids and exponent vectors.

Two monoids are supported: the naturals N and the weak monoid N u {eps},
where eps + 0 = eps + eps = eps and eps + n = n for n >= 1. An exponent
vector of length m is the formal monomial 1^{e_1} ... m^{e_m}; vectors
multiply by slotwise monoid addition.

The general theory asks E to be additively finite. Nothing here enumerates
additive decompositions, so that condition is assumed rather than enforced.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

from backend.algebra.errors import DimensionMismatchError, InvalidExponentError

logger = logging.getLogger(__name__)


class Epsilon:
    """The distinguished nonzero idempotent of the weak monoid."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "e"

    def __reduce__(self):
        return (Epsilon, ())


EPSILON = Epsilon()

ExtNat = Union[int, Epsilon]


def _is_nat(e) -> bool:
    return isinstance(e, int) and not isinstance(e, bool) and e >= 0


# ============================================================
#  MONOIDS
# ============================================================


class ExponentMonoid:
    """Contract for a commutative exponent monoid whose nonzero part is a subsemigroup."""

    name = ""

    def zero(self):
        raise NotImplementedError

    def add(self, e1, e2):
        raise NotImplementedError

    def contains(self, e) -> bool:
        raise NotImplementedError

    def is_zero(self, e) -> bool:
        return e is not EPSILON and e == 0

    def serialize(self, e) -> str:
        return "e" if e is EPSILON else str(e)

    def parse_token(self, token: str):
        token = token.strip()
        if token == "e":
            e = EPSILON
        elif token.isdigit():
            e = int(token)
        else:
            raise InvalidExponentError(f"bad exponent token {token!r}")
        if not self.contains(e):
            raise InvalidExponentError(f"exponent {token!r} is not in monoid {self.name}")
        return e

    def sort_key(self, e) -> Tuple[int, int]:
        # eps sorts before every natural
        return (0, 0) if e is EPSILON else (1, e)

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"

    def __reduce__(self):
        return (monoid_by_name, (self.name,))


class NatMonoid(ExponentMonoid):
    name = "nat"

    def zero(self) -> int:
        return 0

    def add(self, e1: int, e2: int) -> int:
        return e1 + e2

    def contains(self, e) -> bool:
        return _is_nat(e)


class WeakMonoid(ExponentMonoid):
    name = "weak"

    def zero(self) -> int:
        return 0

    def add(self, e1: ExtNat, e2: ExtNat) -> ExtNat:
        if e1 is EPSILON and e2 is EPSILON:
            return EPSILON
        if e1 is EPSILON:
            return EPSILON if e2 == 0 else e2
        if e2 is EPSILON:
            return EPSILON if e1 == 0 else e1
        return e1 + e2

    def contains(self, e) -> bool:
        return e is EPSILON or _is_nat(e)


NAT = NatMonoid()
WEAK = WeakMonoid()

_MONOIDS = {NAT.name: NAT, WEAK.name: WEAK}


def monoid_by_name(name: str) -> ExponentMonoid:
    try:
        return _MONOIDS[name]
    except KeyError:
        raise InvalidExponentError(f"unknown exponent monoid {name!r} (expected nat or weak)") from None


# ============================================================
#  EXPONENT VECTORS
# ============================================================


@dataclass(frozen=True)
class ExponentVector:
    """A dense length-m vector over an exponent monoid."""

    exps: Tuple[ExtNat, ...]
    monoid: ExponentMonoid = NAT

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(self.exps))
        if not self.exps:
            raise DimensionMismatchError("exponent vectors need m >= 1")
        for e in self.exps:
            if not self.monoid.contains(e):
                raise InvalidExponentError(
                    f"exponent {e!r} is not in monoid {self.monoid.name}"
                )

    @classmethod
    def of(cls, *exps, monoid: ExponentMonoid = NAT) -> "ExponentVector":
        return cls(tuple(exps), monoid)

    @property
    def m(self) -> int:
        return len(self.exps)

    def __len__(self) -> int:
        return len(self.exps)

    def __getitem__(self, i: int) -> ExtNat:
        return self.exps[i]

    def __iter__(self):
        return iter(self.exps)

    def __mul__(self, other: "ExponentVector") -> "ExponentVector":
        return ev_product(self, other)

    def is_zero(self) -> bool:
        return ev_is_zero(self)

    def weight(self) -> int:
        """Sum of entries; defined for vectors over N only."""
        if self.monoid is not NAT:
            raise InvalidExponentError("weight is defined only for exponents in N")
        return sum(self.exps)

    def serialize(self) -> str:
        return "[" + ",".join(self.monoid.serialize(e) for e in self.exps) + "]"

    def sort_key(self):
        return tuple(self.monoid.sort_key(e) for e in self.exps)

    def __repr__(self) -> str:
        return self.serialize()


def _check_compatible(u: ExponentVector, v: ExponentVector) -> None:
    if u.m != v.m:
        raise DimensionMismatchError(f"alphabet sizes differ: {u.m} vs {v.m}")
    if u.monoid is not v.monoid:
        raise DimensionMismatchError(
            f"exponent monoids differ: {u.monoid.name} vs {v.monoid.name}"
        )


def ev_product(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    """Formal monomial product w(f) . w(g) = w(f + g)."""
    _check_compatible(u, v)
    add = u.monoid.add
    return ExponentVector(tuple(add(a, b) for a, b in zip(u.exps, v.exps)), u.monoid)


def ev_is_zero(u: ExponentVector) -> bool:
    return all(u.monoid.is_zero(e) for e in u.exps)


def ev_theta(u: ExponentVector) -> ExponentVector:
    """Replace eps by 0 slotwise, landing in N."""
    if u.monoid is not WEAK:
        raise InvalidExponentError("theta is defined on weak exponent vectors")
    return ExponentVector(tuple(0 if e is EPSILON else e for e in u.exps), NAT)


def ev_theta_inverse(u: ExponentVector) -> ExponentVector:
    """Inverse of theta on weak letters: 0 becomes eps."""
    if u.monoid is not NAT:
        raise InvalidExponentError("theta inverse takes exponent vectors over N")
    return ExponentVector(tuple(EPSILON if e == 0 else e for e in u.exps), WEAK)


def embed_weak(u: ExponentVector) -> ExponentVector:
    if u.monoid is not NAT:
        raise InvalidExponentError("only vectors over N embed into the weak monoid")
    return ExponentVector(u.exps, WEAK)


def is_weak_letter(u: ExponentVector) -> bool:
    """True iff every slot lies in P u {eps}."""
    return u.monoid is WEAK and all(not WEAK.is_zero(e) for e in u.exps)


def zero_vector(m: int, monoid: ExponentMonoid = NAT) -> ExponentVector:
    return ExponentVector((monoid.zero(),) * m, monoid)


def epsilon_vector(m: int) -> ExponentVector:
    return ExponentVector((EPSILON,) * m, WEAK)


def unit_vector(i: int, m: int, monoid: ExponentMonoid = NAT) -> ExponentVector:
    """The letter i (1-based) to the first power."""
    if not 1 <= i <= m:
        raise DimensionMismatchError(f"letter {i} outside alphabet [1, {m}]")
    return ExponentVector(tuple(1 if k == i else monoid.zero() for k in range(1, m + 1)), monoid)


def vectors_from_rows(rows: Sequence[Sequence[ExtNat]], monoid: ExponentMonoid) -> Tuple[ExponentVector, ...]:
    """Read the columns of a row-major matrix as exponent vectors."""
    if not rows:
        raise DimensionMismatchError("a matrix needs at least one row")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise DimensionMismatchError("matrix rows have different lengths")
    k = widths.pop()
    return tuple(ExponentVector(tuple(r[j] for r in rows), monoid) for j in range(k))


def rows_from_vectors(vectors: Iterable[ExponentVector], m: int):
    vectors = list(vectors)
    return [[v.exps[i] for v in vectors] for i in range(m)]
