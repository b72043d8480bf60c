"""Exception hierarchy.

Everything raised on purpose by this package derives from EigencountError,
so callers can catch one type. The CLI maps subclasses to exit codes.
"""

from __future__ import annotations


class EigencountError(Exception):
    """Base class for all errors raised by eigencount."""


class MatrixError(EigencountError):
    """Input is not a finite square complex matrix."""


class EigenvalueError(EigencountError):
    """The dense eigensolver failed to converge.

    Carries the offending matrix so the caller can inspect it.
    """

    def __init__(self, message, matrix=None):
        super().__init__(message)
        self.matrix = matrix


class SingularResolventError(EigencountError):
    """lambda is (numerically) an eigenvalue, so lambda - m has no usable inverse.

    Carries the offending shift; when raised from the perturbation
    determinant it signals the caller to move or shrink the contour.
    """

    def __init__(self, message, lam=None):
        super().__init__(message)
        self.lam = lam


class SpecFormatError(EigencountError):
    """An operator document violates the wire format.

    ``location`` is a dotted path into the offending JSON node.
    """

    def __init__(self, message, location=""):
        self.location = location
        prefix = f"{location}: " if location else ""
        super().__init__(prefix + message)


class AdmissibilityError(EigencountError):
    """A mathematical precondition of a bound or constant fails.

    The message always states the violated condition with its numbers.
    """


class ContourError(EigencountError):
    """A winding contour hit a zero or ran out of refinement budget."""


class NormalizationError(EigencountError):
    """A function handed to the zero-counting check is not normalized."""
