# coxeter-cubes - Core Package
"""
Core package for coxeter-cubes.
This package contains the exact type-A engine, the numeric engine for
arbitrary Coxeter matrices, transfer and groupoid machinery, Coxeter cubes,
rectangle partitions and binary trees, and can be used independently of the CLI.
"""

from core.config import load_config, get_enumeration_bound
from core.exceptions import CoxeterError
from core.typea import Permutation, PositiveRoot

__all__ = [
    "load_config",
    "get_enumeration_bound",
    "CoxeterError",
    "Permutation",
    "PositiveRoot",
]
