"""Exception hierarchy for dgmc.

Every error raised by the library derives from DgmcError, so callers
(notably the CLI) can map failures to structured reports without
catching bare exceptions.
"""

from __future__ import annotations


class DgmcError(Exception):
    """Base class for all dgmc errors."""


# ---------------------------------------------------------------- complexes


class ShapeMismatch(DgmcError):
    pass


class NotSquareZero(DgmcError):
    """d∘d ≠ 0; reports the first offending degree."""

    def __init__(self, degree, message=None):
        self.degree = degree
        super().__init__(message or f"d∘d != 0 at degree {degree}")


class ShiftNotZero(DgmcError):
    pass


class FieldMismatch(DgmcError):
    pass


class NotPrime(DgmcError):
    pass


# ---------------------------------------------------------------- dgcat


class LeibnizViolation(DgmcError):
    def __init__(self, triple, message=None):
        self.triple = triple
        super().__init__(message or f"Leibniz rule fails at {triple}")


class AssociativityViolation(DgmcError):
    def __init__(self, triple, message=None):
        self.triple = triple
        super().__init__(message or f"associativity fails at {triple}")


class UnitViolation(DgmcError):
    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"unit law fails at {witness}")


class UnknownFixture(DgmcError):
    pass


class NotClosed(DgmcError):
    pass


class WrongDegree(DgmcError):
    pass


class UnknownObject(DgmcError):
    pass


# ---------------------------------------------------------------- mc


class ShapeError(DgmcError):
    pass


class ObjectMismatch(DgmcError):
    pass


class NotMonotone(DgmcError):
    pass


class WindowTooSmall(DgmcError):
    def __init__(self, needed, given, message=None):
        self.needed = needed
        self.given = given
        super().__init__(
            message
            or f"degree window {given} does not cover required range {needed}"
        )


class NotMaurerCartan(DgmcError):
    """A residual component is nonzero; carries the witnessing index."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"Maurer-Cartan residual nonzero at {index}")


class EdgeNotInvertible(DgmcError):
    def __init__(self, edge, message=None):
        self.edge = edge
        super().__init__(message or f"edge component {edge} is not homotopy invertible")


class InductiveHypothesisViolated(DgmcError):
    pass


class NotStrictlyInvertible(DgmcError):
    pass


class RequiresStrictInverses(DgmcError):
    pass


# ---------------------------------------------------------------- cotensor


class SemisimplicialIdentityViolation(DgmcError):
    def __init__(self, cell, message=None):
        self.cell = cell
        super().__init__(message or f"face identities fail at cell {cell}")


class NotASubcomplex(DgmcError):
    pass


# ---------------------------------------------------------------- pushout


class TruncationUnsound(DgmcError):
    pass


class IncompatibleData(DgmcError):
    pass


# ---------------------------------------------------------------- cli


class ParseError(DgmcError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class VersionMismatch(DgmcError):
    pass
