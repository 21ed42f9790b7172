"""Quasiperiodicity queries on factors of an indexed text."""

from .arith import ArithProg
from .core_text import EmptyTextError, FactorError, TextIndex, build_index
from .index import QuasiperiodIndex
from .periods_borders import BorderDecomposition
from .quasiperiod import CoverAnswer
from .runs import RunRecord

__all__ = [
    "ArithProg",
    "BorderDecomposition",
    "CoverAnswer",
    "EmptyTextError",
    "FactorError",
    "QuasiperiodIndex",
    "RunRecord",
    "TextIndex",
    "build_index",
]

__version__ = "0.1.0"
