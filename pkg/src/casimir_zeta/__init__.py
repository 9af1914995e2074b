"""Semi-analytic local zeta regularization engine for Casimir stress tensors."""

from .series import JetSeries, LaurentSeries

__version__ = "0.1.0"

__all__ = ["JetSeries", "LaurentSeries", "__version__"]
