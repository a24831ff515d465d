"""
Text forms for elements and words.

Element grammar::

    element := ["-"] term (("+" | "-") term)* | "0"
    term    := [coef "*"] basis matrix
    coef    := integer | integer "/" integer
    basis   := "M" | "F"
    matrix  := "[" row ("," row)* "]"
    row     := "[" [exponent ("," exponent)*] "]"

A parsed element is a ``LinComb`` keyed by ``BasisKey(basis, composition)``
so that one literal may mix both bases. Rota-Baxter and weak words use
``w0 | (w1,...,wn)`` with exponent vectors for every w_i.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Tuple, Union

import pyparsing as pp

from backend.algebra.algebra_core import LinComb
from backend.algebra.bases import FElement, MElement, to_f, to_m
from backend.algebra.compositions import MultiComposition
from backend.algebra.errors import ElementParseError, MQSymError
from backend.algebra.exponents import NAT, WEAK, ExponentMonoid, ExponentVector
from backend.algebra.quasi_shuffle import TensorWord
from backend.algebra.rota_baxter import RBWord, SQSymWord

logger = logging.getLogger(__name__)


class BasisKey(NamedTuple):
    basis: str
    composition: MultiComposition


# ============================================================
#  GRAMMAR
# ============================================================


def _fatal(s: str, loc: int, err: Exception) -> pp.ParseFatalException:
    return pp.ParseFatalException(s, loc, str(err))


def _exponent(monoid: ExponentMonoid) -> pp.ParserElement:
    token = pp.Regex(r"\d+|e")

    def convert(s, loc, toks):
        try:
            return [monoid.parse_token(toks[0])]
        except MQSymError as err:
            raise _fatal(s, loc, err)

    return token.set_parse_action(convert)


def _coefficient(s, loc, toks):
    _, _, denominator = toks[0].partition("/")
    if denominator and int(denominator) == 0:
        raise pp.ParseFatalException(s, loc, "zero denominator")
    return [Fraction(toks[0])]


def _vector(monoid: ExponentMonoid) -> pp.ParserElement:
    return pp.Group(
        pp.Suppress("[") + pp.Optional(pp.DelimitedList(_exponent(monoid))) + pp.Suppress("]")
    )


@lru_cache(maxsize=None)
def _element_grammar(m: int, monoid_name: str) -> pp.ParserElement:
    monoid = WEAK if monoid_name == WEAK.name else NAT
    matrix = pp.Suppress("[") + pp.DelimitedList(_vector(monoid)) + pp.Suppress("]")
    coef = pp.Regex(r"\d+(/\d+)?").set_parse_action(_coefficient)
    basis = pp.one_of("M F")
    term = pp.Optional(coef + pp.Suppress("*"), default=Fraction(1)) + basis + pp.Group(matrix)

    def build(s, loc, toks):
        coeff, name, rows = toks[0], toks[1], [list(r) for r in toks[2]]
        if len(rows) != m:
            raise pp.ParseFatalException(s, loc, f"matrix has {len(rows)} rows, expected m={m}")
        if name == "F" and monoid is not NAT:
            raise pp.ParseFatalException(s, loc, "the F basis needs monoid nat")
        try:
            comp = MultiComposition.from_matrix(rows, monoid)
        except MQSymError as err:
            raise _fatal(s, loc, err)
        return [(BasisKey(name, comp), coeff)]

    term.set_parse_action(build)
    sign = pp.one_of("+ -")
    first = pp.Group(pp.Optional(pp.Literal("-"), default="+") + term)
    rest = pp.Group(sign + term)
    zero = (pp.Literal("0") + pp.StringEnd()).set_parse_action(lambda: [])
    return zero | first + pp.ZeroOrMore(rest) + pp.StringEnd()


@lru_cache(maxsize=None)
def _word_grammar(monoid_name: str) -> pp.ParserElement:
    monoid = WEAK if monoid_name == WEAK.name else NAT
    vector = _vector(monoid)
    tail = pp.Group(pp.Suppress("(") + pp.Optional(pp.DelimitedList(vector)) + pp.Suppress(")"))
    return vector + pp.Suppress("|") + tail + pp.StringEnd()


def _run(grammar: pp.ParserElement, text: str) -> pp.ParseResults:
    try:
        return grammar.parse_string(text, parse_all=True)
    except pp.ParseBaseException as err:
        raise ElementParseError(err.msg, err.loc, text) from None


# ============================================================
#  PARSING
# ============================================================


def parse_element(text: str, m: int, monoid: ExponentMonoid = NAT) -> LinComb:
    """Parse an element literal into a LinComb keyed by ``BasisKey``."""
    toks = _run(_element_grammar(m, monoid.name), text)
    terms = []
    for group in toks:
        sign, (key, coeff) = group[0], group[1]
        terms.append((key, coeff if sign == "+" else -coeff))
    result = LinComb(terms)
    logger.debug("parsed %r into %d terms", text, len(result))
    return result


def _words(text: str, m: int, monoid: ExponentMonoid) -> Tuple[ExponentVector, Tuple[ExponentVector, ...]]:
    toks = _run(_word_grammar(monoid.name), text)
    try:
        head = ExponentVector(tuple(toks[0]), monoid)
        tail = tuple(ExponentVector(tuple(v), monoid) for v in toks[1])
    except MQSymError as err:
        raise ElementParseError(str(err), 0, text) from None
    for v in (head,) + tail:
        if v.m != m:
            raise ElementParseError(f"vector {v.serialize()} has length {v.m}, expected m={m}", 0, text)
    return head, tail


def parse_rb_word(text: str, m: int) -> RBWord:
    head, tail = _words(text, m, NAT)
    return RBWord(head, TensorWord(tail, m, NAT))


def parse_sqsym_word(text: str, m: int) -> SQSymWord:
    head, tail = _words(text, m, WEAK)
    try:
        return SQSymWord(head, MultiComposition(tail, m, WEAK))
    except MQSymError as err:
        raise ElementParseError(str(err), 0, text) from None


# ============================================================
#  BASIS VIEWS
# ============================================================


def split_bases(x: LinComb) -> Tuple[MElement, FElement]:
    """Separate a tagged element into its M part and its F part."""
    m_part = MElement({k.composition: c for k, c in x.items() if k.basis == "M"})
    f_part = FElement({k.composition: c for k, c in x.items() if k.basis == "F"})
    return m_part, f_part


def as_m(x: LinComb) -> MElement:
    m_part, f_part = split_bases(x)
    return m_part + to_m(f_part) if f_part else m_part


def as_f(x: LinComb) -> FElement:
    m_part, f_part = split_bases(x)
    return f_part + to_f(m_part) if m_part else f_part


def tag(x: Union[MElement, FElement]) -> LinComb:
    return LinComb({BasisKey(x.basis_name, k): c for k, c in x.items()})


# ============================================================
#  FORMATTING
# ============================================================


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join(terms) -> str:
    out = []
    for k, (body, c) in enumerate(terms):
        mag = -c if c < 0 else c
        text = body if mag == 1 else f"{format_coefficient(mag)}*{body}"
        if k == 0:
            out.append(f"-{text}" if c < 0 else text)
        else:
            out.append(f" {'-' if c < 0 else '+'} {text}")
    return "".join(out) if out else "0"


def _basis_term(basis: str, comp: MultiComposition) -> str:
    return f"{basis}{comp.serialize()}"


def format_element(x: LinComb) -> str:
    """Canonical text of an M/F element or a tagged element; ``0`` when empty."""
    if isinstance(x, (MElement, FElement)):
        x = tag(x)
    return _join((_basis_term(k.basis, k.composition), c) for k, c in x.items())


def format_tensor(x: LinComb, basis: str = "M") -> str:
    """Text of an element of the tensor square, factors joined by ``(x)``."""
    return _join(
        (f"{_basis_term(basis, left)} (x) {_basis_term(basis, right)}", c)
        for (left, right), c in x.items()
    )


def format_words(x: LinComb) -> str:
    """Text of a combination of Rota-Baxter or weak words."""
    return _join((f"({w.serialize()})", c) for w, c in x.items())


def matrix_tokens(comp: MultiComposition):
    return [[e if isinstance(e, int) else comp.monoid.serialize(e) for e in row] for row in comp.to_matrix()]


def element_records(x: LinComb) -> list:
    if isinstance(x, (MElement, FElement)):
        x = tag(x)
    return [
        {"coefficient": format_coefficient(c), "basis": k.basis, "matrix": matrix_tokens(k.composition)}
        for k, c in x.items()
    ]


def tensor_records(x: LinComb, basis: str = "M") -> list:
    return [
        {
            "coefficient": format_coefficient(c),
            "basis": basis,
            "left": matrix_tokens(left),
            "right": matrix_tokens(right),
        }
        for (left, right), c in x.items()
    ]
