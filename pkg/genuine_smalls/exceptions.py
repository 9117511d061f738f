"""
This module defines the exceptions raised by genuine_smalls. Every error the library raises on
purpose derives from `GenuineSmallsException`, so callers (and the verifier) can tell library
failures apart from programming errors.

The verification layer adds two exceptions of its own, `ClaimFailed` and `RecordedDiscrepancy`,
which a claim raises to report its outcome.
"""

from typing import Any, Optional

__all__ = [
    "GenuineSmallsException",
    "RootSystemError",
    "LatticeError",
    "WeylGroupError",
    "OracleBoundExceeded",
    "UnsupportedShape",
    "InductionError",
    "OrbitError",
    "RealFormError",
    "DiagramError",
    "SchemeError",
    "KTypeError",
    "ClaimFailed",
    "RecordedDiscrepancy",
]


class GenuineSmallsException(Exception):
    """
    The base exception class for genuine_smalls. All custom exceptions should inherit from
    this class.
    """


class RootSystemError(GenuineSmallsException):
    """Raised for an invalid Cartan type or rank, a vector that is not a root, or a singular weight."""


class LatticeError(GenuineSmallsException):
    """Raised when a lattice quotient is not defined (containment fails or a lattice is not of full rank)."""


class WeylGroupError(GenuineSmallsException):
    """Raised for ill-formed Weyl group requests, e.g. a product over non-orthogonal roots."""


class OracleBoundExceeded(WeylGroupError):
    """
    Raised when a Weyl group is too large to be enumerated element by element.

    :param order: The order of the group that was requested.
    :type order: int
    :param bound: The configured enumeration bound.
    :type bound: int
    """

    def __init__(self, order: int, bound: int):
        self.order = order
        self.bound = bound
        super().__init__(f"group order {order} exceeds the enumeration bound {bound}")


class UnsupportedShape(GenuineSmallsException):
    """Raised when an induction has no closed form and the ambient group is beyond the oracle bound."""


class InductionError(GenuineSmallsException):
    """Raised when truncated induction does not single out one constituent of multiplicity one."""


class OrbitError(GenuineSmallsException):
    """Raised for a partition that does not label a nilpotent orbit of the requested type."""


class RealFormError(GenuineSmallsException):
    """Raised for an unknown or unsupported real form label."""


class DiagramError(GenuineSmallsException):
    """Raised for a non simply-laced diagram or a node subset outside the even-neighbour family."""


class SchemeError(GenuineSmallsException):
    """Raised for a malformed parameter scheme or a request outside the supported ranks."""


class KTypeError(GenuineSmallsException):
    """Raised for mismatched interlacing lengths or an unknown representation family."""


class ClaimFailed(GenuineSmallsException):
    """
    Raised inside a verification claim when the computed value disagrees with the expected one.

    :param message: What was checked.
    :type message: str
    :param expected: The expected value, if meaningful.
    :type expected: Any
    :param actual: The computed value, if meaningful.
    :type actual: Any
    """

    def __init__(self, message: str, expected: Any = None, actual: Any = None):
        self.expected = expected
        self.actual = actual
        super().__init__(message)


class RecordedDiscrepancy(GenuineSmallsException):
    """
    Raised inside a verification claim when the computation is sound but disagrees with the
    printed value, which is then reported instead of corrected.

    :param message: A description of the disagreement.
    :type message: str
    :param printed: The value as printed.
    :type printed: Any
    :param computed: The value this library computes.
    :type computed: Any
    """

    def __init__(self, message: str, printed: Any = None, computed: Optional[Any] = None):
        self.printed = printed
        self.computed = computed
        super().__init__(message)
