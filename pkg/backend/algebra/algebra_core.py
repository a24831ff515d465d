"""
Exact rational scalars and sparse linear combinations.

Every algebra element in the package is a ``LinComb``: an immutable map from
basis keys to nonzero ``Fraction`` coefficients. Keys are ordered by
``canonical_key`` so that iteration, printing and hashing are deterministic.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction
from math import gcd
from typing import (
    Any,
    Callable,
    Dict,
    Hashable,
    Iterable,
    Iterator,
    Mapping,
    Tuple,
    TypeVar,
    Union,
)

logger = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)
Scalar = Union[int, Fraction, str]

# The coefficient ring is Q.
Rational = Fraction


def to_rational(value: Scalar) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string into a Fraction."""
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not supported")
    return Fraction(value)


def canonical_key(key: Any) -> Any:
    """
    Sort key for a basis key.

    Keys that know their own order expose ``sort_key()``; tuples of keys
    (tensor products, tagged keys) are ordered componentwise.
    """
    if isinstance(key, tuple):
        return tuple(canonical_key(k) for k in key)
    sort_key = getattr(key, "sort_key", None)
    if sort_key is not None:
        return sort_key()
    return key


class LinComb(Mapping):
    """
    Finite linear combination of basis keys with rational coefficients.

    Zero coefficients are dropped at construction, so two combinations are
    equal exactly when their term maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[K, Scalar], Iterable[Tuple[K, Scalar]], None] = None):
        acc: Dict[Any, Fraction] = defaultdict(Fraction)
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                acc[key] += to_rational(coeff)
        ordered = sorted(
            ((k, c) for k, c in acc.items() if c != 0),
            key=lambda kv: canonical_key(kv[0]),
        )
        self._terms: Dict[Any, Fraction] = dict(ordered)
        self._hash = None

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def basis(cls, key, coeff: Scalar = 1):
        return cls({key: coeff})

    def _new(self, terms) -> "LinComb":
        return type(self)(terms)

    def _check_same_kind(self, other: "LinComb") -> None:
        if not isinstance(other, LinComb):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if type(self) is not type(other) and not (
            type(self) is LinComb or type(other) is LinComb
        ):
            raise TypeError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )

    # -- Mapping protocol ----------------------------------------------------

    def __getitem__(self, key) -> Fraction:
        return self._terms[key]

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def support(self) -> Tuple:
        return tuple(self._terms)

    # -- vector space operations --------------------------------------------

    def __add__(self, other: "LinComb") -> "LinComb":
        self._check_same_kind(other)
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, Fraction(0)) + coeff
        target = self if type(self) is not LinComb else other
        return target._new(acc)

    def __neg__(self) -> "LinComb":
        return self._new({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> "LinComb":
        if isinstance(scalar, LinComb):
            return NotImplemented
        c = to_rational(scalar)
        if c == 0:
            return self._new({})
        return self._new({k: c * v for k, v in self._terms.items()})

    __rmul__ = __mul__

    # -- equality -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other: object) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        body = ", ".join(f"{k!r}: {c}" for k, c in self._terms.items())
        return f"{type(self).__name__}({{{body}}})"


# ============================================================
#  FUNCTIONAL INTERFACE
# ============================================================


def lincomb_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def lincomb_sub(a: LinComb, b: LinComb) -> LinComb:
    return a - b


def lincomb_neg(a: LinComb) -> LinComb:
    return -a


def lincomb_scale(c: Scalar, a: LinComb) -> LinComb:
    return a * c


def coefficient(a: LinComb, key) -> Fraction:
    return a.coefficient(key)


def linear_extend(f: Callable[[Any], LinComb], a: LinComb, result=LinComb) -> LinComb:
    """Apply a key-wise map ``f`` linearly: sum of coeff * f(key)."""
    acc: Dict[Any, Fraction] = defaultdict(Fraction)
    for key, coeff in a.items():
        for image, c in f(key).items():
            acc[image] += coeff * c
    return result(acc)


def lincomb_bilinear_extend(
    f: Callable[[Any, Any], LinComb], a: LinComb, b: LinComb, result=None
) -> LinComb:
    """
    Extend a product defined on basis keys bilinearly.

    Parameters:
    f : callable
        Product of two basis keys, returning a LinComb.
    a, b : LinComb
        The operands.
    result : type, optional
        LinComb subclass for the result (defaults to the type of ``a``).

    Returns:
    LinComb
        Sum over key pairs of coeff_a * coeff_b * f(k_a, k_b).
    """
    result = result or type(a)
    acc: Dict[Any, Fraction] = defaultdict(Fraction)
    for ka, ca in a.items():
        for kb, cb in b.items():
            for key, c in f(ka, kb).items():
                acc[key] += ca * cb * c
    return result(acc)


def tensor(a: LinComb, b: LinComb) -> LinComb:
    """The element a (x) b, keyed by pairs."""
    return LinComb(((ka, kb), ca * cb) for ka, ca in a.items() for kb, cb in b.items())


def is_normalized(a: LinComb) -> bool:
    """Audit that every coefficient is a nonzero Fraction in lowest terms."""
    for coeff in a.values():
        if not isinstance(coeff, Fraction) or coeff == 0:
            return False
        if coeff.denominator <= 0 or gcd(coeff.numerator, coeff.denominator) != 1:
            return False
    return True
