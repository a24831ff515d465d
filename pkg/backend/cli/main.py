"""
Command-line entry point.

Examples::

    python mqsym.py f2m "F[[1],[2]]" --m 2
    python mqsym.py product "M[[1],[2]]" "M[[2],[0]]"
    python mqsym.py rb-check --random 100 --seed 42
"""

import argparse
import logging
import sys
from typing import List, Optional

from backend.algebra.errors import MQSymError
from backend.cli.commands import FORMATS, VERBS, Command, run
from backend.config import get_settings


def build_parser(settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mqsym",
        description="Exact computations with multi-quasisymmetric functions and free Rota-Baxter algebras.",
    )
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("arguments", metavar="argument", nargs="*", help="element literals, words or a weight")
    parser.add_argument("--m", type=int, default=settings.default_m, help="alphabet size")
    parser.add_argument("--monoid", choices=("nat", "weak"), default=settings.default_monoid)
    parser.add_argument("--basis", choices=("M", "F"), default="M", help="output basis for product and antipode")
    parser.add_argument("--trunc", type=int, default=settings.default_trunc, help="truncation level N")
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--seed", type=int, default=None, help="unsigned 64-bit seed for --random")
    parser.add_argument("--random", type=int, default=None, metavar="K", help="check K random pairs")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        settings = get_settings()
    except MQSymError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    logging.basicConfig(
        level=settings.log_level,
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )

    args = build_parser(settings).parse_args(argv)
    cmd = Command(
        verb=args.verb,
        arguments=args.arguments,
        m=args.m,
        monoid=args.monoid,
        basis=args.basis,
        trunc=args.trunc,
        format=args.format,
        seed=args.seed,
        random=args.random,
    )
    result = run(cmd)
    if result.error is not None:
        print(f"error: {result.error}", file=sys.stderr)
    else:
        print(result.output)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
