"""
Command model shared by the command-line front end and the HTTP service.

``run`` never raises for domain errors: usage and parse problems become exit
code 2, a failed identity check exit code 1, success exit code 0.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import reduce
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from backend.algebra.algebra_core import LinComb
from backend.algebra.bases import m_antipode, m_coproduct, m_product, to_f, transition_matrix
from backend.algebra.errors import MQSymError
from backend.algebra.exponents import EPSILON, NAT, WEAK, ExponentVector, monoid_by_name
from backend.algebra.realization import TruncatedSeries, expand_f, expand_m, series_scale
from backend.algebra.rota_baxter import (
    RBWord,
    SQSymWord,
    check_iso,
    check_rb_identity,
)
from backend.algebra.compositions import MultiComposition
from backend.algebra.quasi_shuffle import TensorWord
from backend.cli.parser import (
    as_f,
    as_m,
    element_records,
    format_element,
    format_tensor,
    parse_element,
    parse_rb_word,
    parse_sqsym_word,
    split_bases,
    tensor_records,
)

logger = logging.getLogger(__name__)

VERBS = ("product", "coproduct", "antipode", "f2m", "m2f", "expand", "rb-check", "iso-check", "transition")
FORMATS = ("text", "json")
MAX_SEED = 2**64 - 1


class UsageError(MQSymError):
    """A command is malformed before any algebra runs."""


@dataclass
class Command:
    verb: str
    arguments: List[str] = field(default_factory=list)
    m: int = 2
    monoid: str = "nat"
    basis: str = "M"
    trunc: int = 7
    format: str = "text"
    seed: Optional[int] = None
    random: Optional[int] = None

    def validate(self) -> None:
        """Check the verb, options and argument arity."""
        if self.verb not in VERBS:
            raise UsageError(f"unknown verb {self.verb!r}; expected one of {', '.join(VERBS)}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.basis not in ("M", "F"):
            raise UsageError(f"unknown basis {self.basis!r}; expected M or F")
        if self.m < 1:
            raise UsageError("--m must be positive")
        if self.trunc < 1:
            raise UsageError("--trunc must be positive")
        monoid = monoid_by_name(self.monoid)
        if self.basis == "F" and monoid is not NAT:
            raise UsageError("--basis F needs --monoid nat")
        if self.seed is not None and not 0 <= self.seed <= MAX_SEED:
            raise UsageError("--seed must fit in an unsigned 64-bit integer")

        n = len(self.arguments)
        if self.verb == "product" and n < 2:
            raise UsageError("product takes at least two elements")
        if self.verb in ("coproduct", "antipode", "f2m", "m2f", "expand", "transition") and n != 1:
            raise UsageError(f"{self.verb} takes exactly one argument")
        if self.verb in ("rb-check", "iso-check"):
            if self.random is not None:
                if n:
                    raise UsageError(f"{self.verb} takes either two words or --random, not both")
                if self.seed is None:
                    raise UsageError("--random needs an explicit --seed")
                if self.random < 1:
                    raise UsageError("--random must be positive")
            elif n != 2:
                raise UsageError(f"{self.verb} takes two words (or --random K --seed S)")
        elif self.random is not None:
            raise UsageError(f"--random applies to rb-check and iso-check only, not {self.verb}")
        if self.verb in ("f2m", "m2f", "transition") and monoid is not NAT:
            raise UsageError(f"{self.verb} is defined only for --monoid nat")


@dataclass
class CommandResult:
    exit_code: int
    output: str
    data: Any = None
    error: Optional[str] = None


# ============================================================
#  VERBS
# ============================================================


def _elements(cmd: Command) -> List[LinComb]:
    monoid = monoid_by_name(cmd.monoid)
    return [parse_element(text, cmd.m, monoid) for text in cmd.arguments]


def _in_basis(x, basis: str):
    return to_f(x) if basis == "F" else x


def _element_result(x) -> Tuple[str, Any]:
    return format_element(x), element_records(x)


def _product(cmd: Command):
    total = reduce(m_product, (as_m(x) for x in _elements(cmd)))
    return _element_result(_in_basis(total, cmd.basis))


def _coproduct(cmd: Command):
    (x,) = _elements(cmd)
    delta = m_coproduct(as_m(x))
    return format_tensor(delta), tensor_records(delta)


def _antipode(cmd: Command):
    (x,) = _elements(cmd)
    return _element_result(_in_basis(m_antipode(as_m(x)), cmd.basis))


def _f2m(cmd: Command):
    (x,) = _elements(cmd)
    return _element_result(as_m(x))


def _m2f(cmd: Command):
    (x,) = _elements(cmd)
    return _element_result(as_f(x))


def _expand(cmd: Command):
    (x,) = _elements(cmd)
    monoid = monoid_by_name(cmd.monoid)
    m_part, f_part = split_bases(x)
    series = TruncatedSeries(cmd.trunc, cmd.m, monoid)
    for w, c in m_part.items():
        series = series + series_scale(c, expand_m(w, cmd.trunc))
    for w, c in f_part.items():
        series = series + series_scale(c, expand_f(w, cmd.trunc))
    return series.serialize(), series.to_records()


def _transition(cmd: Command):
    try:
        n = int(cmd.arguments[0])
    except ValueError:
        raise UsageError(f"transition takes an integer weight, got {cmd.arguments[0]!r}") from None
    df = transition_matrix(n, cmd.m)
    records = df.reset_index().to_dict(orient="records")
    return df.to_string(), [{k: (int(v) if not isinstance(v, str) else v) for k, v in r.items()} for r in records]


def _random_vector(rng: np.random.Generator, m: int, weak: bool) -> ExponentVector:
    values = rng.integers(0, 3, size=m).tolist()
    if weak:
        return ExponentVector(tuple(EPSILON if v == 0 else v for v in values), WEAK)
    return ExponentVector(tuple(values), NAT)


def random_rb_word(rng: np.random.Generator, m: int, max_tail: int = 2) -> RBWord:
    length = int(rng.integers(0, max_tail + 1))
    tail = tuple(_random_vector(rng, m, False) for _ in range(length))
    return RBWord(_random_vector(rng, m, False), TensorWord(tail, m, NAT))


def random_sqsym_word(rng: np.random.Generator, m: int, max_tail: int = 2) -> SQSymWord:
    length = int(rng.integers(0, max_tail + 1))
    tail = tuple(_random_vector(rng, m, True) for _ in range(length))
    return SQSymWord(_random_vector(rng, m, True), MultiComposition(tail, m, WEAK))


def _check(cmd: Command, parse: Callable, draw: Callable, check: Callable):
    if cmd.random is not None:
        rng = np.random.default_rng(cmd.seed)
        pairs = [(draw(rng, cmd.m), draw(rng, cmd.m)) for _ in range(cmd.random)]
    else:
        pairs = [tuple(parse(text, cmd.m) for text in cmd.arguments)]
    failures = [(a, b) for a, b in pairs if not check(a, b)]
    data = {
        "checked": len(pairs),
        "passed": len(pairs) - len(failures),
        "failures": [[a.serialize(), b.serialize()] for a, b in failures],
    }
    text = f"{cmd.verb}: {data['passed']}/{data['checked']} passed"
    for a, b in failures:
        text += f"\nFAILED ({a.serialize()}) ({b.serialize()})"
    return text, data, not failures


def _rb_check(cmd: Command):
    return _check(
        cmd,
        parse_rb_word,
        random_rb_word,
        lambda a, b: check_rb_identity(LinComb.basis(a), LinComb.basis(b)),
    )


def _iso_check(cmd: Command):
    return _check(cmd, parse_sqsym_word, random_sqsym_word, check_iso)


_HANDLERS: Dict[str, Callable] = {
    "product": _product,
    "coproduct": _coproduct,
    "antipode": _antipode,
    "f2m": _f2m,
    "m2f": _m2f,
    "expand": _expand,
    "transition": _transition,
    "rb-check": _rb_check,
    "iso-check": _iso_check,
}


# ============================================================
#  DRIVER
# ============================================================


def execute(cmd: Command) -> CommandResult:
    """Run a command, letting domain errors propagate."""
    cmd.validate()
    outcome = _HANDLERS[cmd.verb](cmd)
    if len(outcome) == 3:
        text, data, ok = outcome
    else:
        (text, data), ok = outcome, True
    payload = {"verb": cmd.verb, "result": data}
    output = json.dumps(payload, indent=2) if cmd.format == "json" else text
    return CommandResult(0 if ok else 1, output, payload)


def run(cmd: Command) -> CommandResult:
    """Run a command and map domain errors to exit code 2."""
    try:
        result = execute(cmd)
    except MQSymError as e:
        logger.debug("command %s failed: %s", cmd.verb, e)
        return CommandResult(2, "", None, str(e))
    logger.debug("command %s finished with exit code %d", cmd.verb, result.exit_code)
    return result
