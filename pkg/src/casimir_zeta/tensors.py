"""Stress tensor containers and frame changes.

Components are covariant, ordered ``(t, x1, x2, x3)`` in the Cartesian frame
and ``(t, rho, theta, z)`` in the cylindrical one, with signature
``(-, +, +, +)`` and ``g_theta_theta = rho**2``.  The cylindrical frame uses
``x1 = rho sin(theta)`` and ``x2 = rho cos(theta)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainViolation

CARTESIAN = "cartesian"
CYLINDRICAL = "cylindrical"
METRIC = "(-,+,+,+)"


@dataclass(frozen=True)
class StressTensor:
    components: np.ndarray
    frame: str = CARTESIAN
    rho: float | None = None
    theta: float | None = None
    metric: str = METRIC

    def __post_init__(self):
        c = np.array(self.components, dtype=float)
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise DomainViolation("stress tensor must be a square array")
        c.setflags(write=False)
        object.__setattr__(self, "components", c)
        if self.frame not in (CARTESIAN, CYLINDRICAL):
            raise DomainViolation(f"unknown frame {self.frame!r}")
        if self.frame == CYLINDRICAL and self.rho is None:
            raise DomainViolation("cylindrical tensors need rho")

    @property
    def dim(self) -> int:
        return self.components.shape[0]

    def __getitem__(self, idx):
        return self.components[idx]

    def inverse_metric(self) -> np.ndarray:
        g = np.ones(self.dim)
        g[0] = -1.0
        if self.frame == CYLINDRICAL:
            g[2] = 1.0 / self.rho ** 2
        return g

    def trace(self) -> float:
        return float(np.sum(self.inverse_metric() * np.diag(self.components)))

    def is_symmetric(self, tol: float = 0.0) -> bool:
        c = self.components
        return bool(np.all(np.abs(c - c.T) <= tol))

    def with_components(self, comps) -> "StressTensor":
        return StressTensor(comps, self.frame, self.rho, self.theta, self.metric)

    def __add__(self, other: "StressTensor") -> "StressTensor":
        return self.with_components(self.components + other.components)

    def __mul__(self, c: float) -> "StressTensor":
        return self.with_components(self.components * float(c))

    __rmul__ = __mul__

    def to_dict(self) -> dict:
        return {
            "frame": self.frame,
            "metric": self.metric,
            "rho": self.rho,
            "theta": self.theta,
            "components": self.components.tolist(),
        }


@dataclass(frozen=True)
class ConformalSplit:
    """``total = conformal + (xi - xi_d) * nonconformal``."""

    conformal: StressTensor
    nonconformal: StressTensor
    xi: float
    xi_d: float
    paper_eq: str = ""

    @property
    def total(self) -> StressTensor:
        return self.conformal + self.nonconformal * (self.xi - self.xi_d)

    @property
    def frame(self) -> str:
        return self.conformal.frame


@dataclass(frozen=True)
class PressureResult:
    """Force per unit area on a boundary, as a covector in the local frame."""

    vector: np.ndarray
    prescription: str
    finite: bool = True
    divergence_exponent: float | None = None
    frame: str = CARTESIAN
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        v = np.array(self.vector, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "vector", v)
        if not self.finite and self.divergence_exponent is None:
            raise DomainViolation("a divergent pressure must carry its exponent")


BOUNDARY_FIRST = "boundary_first"
INTERIOR_LIMIT = "interior_limit"


def cylindrical_jacobian(rho: float, theta: float) -> np.ndarray:
    """``J[a, mu] = d q^mu / d x^a`` on the spatial block, q = (rho, theta, z)."""
    s, c = math.sin(theta), math.cos(theta)
    return np.array([
        [s, c / rho, 0.0],
        [c, -s / rho, 0.0],
        [0.0, 0.0, 1.0],
    ])


def frame_transform(t: StressTensor, target: str, rho: float | None = None,
                    theta: float | None = None) -> StressTensor:
    """Change the frame of a 4x4 covariant tensor."""
    if target == t.frame:
        return t
    rho = t.rho if rho is None else rho
    theta = t.theta if theta is None else theta
    if rho is None or theta is None:
        raise DomainViolation("frame changes need the point (rho, theta)")
    if t.dim != 4:
        raise DomainViolation("frame changes are defined for 4x4 tensors")
    j = cylindrical_jacobian(rho, theta)
    m = np.eye(4)
    if t.frame == CYLINDRICAL and target == CARTESIAN:
        m[1:, 1:] = j
    elif t.frame == CARTESIAN and target == CYLINDRICAL:
        m[1:, 1:] = np.linalg.inv(j)
    else:
        raise DomainViolation(f"cannot transform {t.frame} to {target}")
    comps = m @ t.components @ m.T
    if t.is_symmetric():
        # the two triple products differ by rounding only
        comps = 0.5 * (comps + comps.T)
    return StressTensor(comps, target, rho, theta, t.metric)


def covector_to_cartesian(v, rho: float, theta: float) -> np.ndarray:
    """Cylindrical covector components ``(v_rho, v_theta, v_z)`` to Cartesian."""
    return cylindrical_jacobian(rho, theta) @ np.asarray(v, dtype=float)
