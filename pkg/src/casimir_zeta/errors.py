"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CasimirError(Exception):
    """Base class; carries a short machine readable ``code``."""

    code = "casimir_error"

    def to_dict(self) -> dict:
        return {"error": self.code, "type": type(self).__name__, "message": str(self)}


class ZeroLeadingCoefficient(CasimirError):
    code = "zero_leading_coefficient"


class OddLeadingOrder(CasimirError):
    code = "odd_leading_order"


class NegativeLeadingCoefficient(CasimirError):
    code = "negative_leading_coefficient"


class DomainViolation(CasimirError):
    code = "domain_violation"


class OutOfTruncationWindow(CasimirError):
    code = "out_of_truncation_window"


class PoleAt(CasimirError):
    code = "pole"

    def __init__(self, x: float):
        super().__init__(f"gamma function has a pole at {x!r}")
        self.x = x


class NonPositiveArgument(CasimirError):
    code = "non_positive_argument"


class GeometryViolation(CasimirError):
    code = "geometry_violation"


class TruncationMarginExceeded(CasimirError):
    code = "truncation_margin_exceeded"


class DeepPole(CasimirError):
    code = "deep_pole"


class QuadratureNotConverged(CasimirError):
    code = "quadrature_not_converged"


class EvenDimensionUnsupported(CasimirError):
    code = "even_dimension_unsupported"


class CornerPoint(CasimirError):
    code = "corner_point"


class UnknownKey(CasimirError):
    code = "unknown_key"
