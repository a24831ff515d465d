"""
Multi-quasisymmetric functions with semigroup exponents.

Submodules, bottom-up: ``algebra_core`` (rational linear combinations),
``exponents``, ``quasi_shuffle``, ``compositions``, ``hopf``, ``bases``,
``realization`` and ``rota_baxter``.
"""

from backend.algebra.algebra_core import LinComb
from backend.algebra.bases import FElement, MElement
from backend.algebra.compositions import MultiComposition
from backend.algebra.errors import MQSymError
from backend.algebra.exponents import EPSILON, NAT, WEAK, ExponentVector
from backend.algebra.quasi_shuffle import TensorWord
from backend.algebra.realization import TruncatedSeries
from backend.algebra.rota_baxter import RBWord, SQSymWord

__all__ = [
    "EPSILON",
    "NAT",
    "WEAK",
    "ExponentVector",
    "FElement",
    "LinComb",
    "MElement",
    "MQSymError",
    "MultiComposition",
    "RBWord",
    "SQSymWord",
    "TensorWord",
    "TruncatedSeries",
]
