"""Error types raised by the Coxeter cube library."""

from __future__ import annotations


class CoxeterError(Exception):
    """Base class for every failure signalled by the library."""


class RankMismatchError(CoxeterError, ValueError):
    """Operands live in Coxeter systems of different rank."""


class InvalidElementError(CoxeterError, ValueError):
    """A permutation, root or generator index is malformed for its rank."""


class InvalidInversionSetError(CoxeterError, ValueError):
    """A root set is not the inversion set of any element."""


class NonReducedWordError(CoxeterError, ValueError):
    """A word was expected to be reduced but is not."""


class MalformedMatrixError(CoxeterError, ValueError):
    """A Coxeter matrix violates symmetry, diagonal or off-diagonal rules."""


class RootCapExceededError(CoxeterError):
    """Root generation grew past its cap; the system is presumed infinite."""

    def __init__(self, cap: int, message: str | None = None):
        self.cap = cap
        super().__init__(message or f"Root generation exceeded cap of {cap} roots")


class InvalidGeneratorError(CoxeterError, ValueError):
    """A groupoid generator or morphism does not satisfy its defining conditions."""


class InvalidCubeError(CoxeterError, ValueError):
    """A square, cube, partition or tree argument is not valid for the operation."""


class BoundExceededError(CoxeterError, ValueError):
    """A requested rank is larger than the configured enumeration bound."""

    def __init__(self, rank: int, bound: int, what: str = "enumeration"):
        self.rank = rank
        self.bound = bound
        super().__init__(f"Rank {rank} exceeds the {what} bound of {bound}")


class ParseError(CoxeterError, ValueError):
    """Text or JSON input could not be parsed."""
