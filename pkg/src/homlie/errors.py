"""Exception hierarchy shared by every module."""

from __future__ import annotations


class HomLieError(Exception):
    """Base class for all errors raised by the package."""


class DivisionByZero(HomLieError, ZeroDivisionError):
    pass


class DenominatorVanishes(HomLieError, ZeroDivisionError):
    pass


class DimensionMismatch(HomLieError, ValueError):
    pass


class ConstraintViolation(HomLieError, ValueError):
    pass


class WitnessError(HomLieError):
    """An error that carries the basis labels and residual that caused it."""

    def __init__(self, message: str, where=None, residual=None):
        super().__init__(message)
        self.where = where
        self.residual = residual


class NotAMorphism(WitnessError):
    pass


class NotAnRMatrix(WitnessError):
    pass


class NotAlphaCommuting(WitnessError):
    pass


class NotAlphaFixed(WitnessError):
    pass


class NotAntiSymmetric(WitnessError):
    pass


class NotACochain(WitnessError):
    pass


class NotABialgebraMorphism(WitnessError):
    pass


class NotInvertible(WitnessError):
    pass


class RNotFixed(WitnessError):
    pass


class CoboundObstruction(WitnessError):
    pass


class PerturbObstruction(WitnessError):
    pass


class MixedChybeObstruction(WitnessError):
    pass


class AxiomError(HomLieError, ValueError):
    """Raised when a structure fails its axioms at construction."""

    def __init__(self, report):
        self.report = report
        failed = ", ".join(ch.name for ch in report.failures())
        super().__init__(f"axioms failed: {failed}")


class ParseError(HomLieError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        elif column is not None:
            loc = f"column {column}: "
        super().__init__(loc + message)
        self.message = message


class ValidationError(HomLieError, ValueError):
    pass
