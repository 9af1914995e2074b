"""Analytic continuation: residues in ``t``, regular parts in ``u``, and a
keyhole quadrature that checks both.

Massless configurations lead to Mellin integrals of meromorphic cylinder
kernels; closing the Hankel contour turns them into a single Laurent
coefficient (:func:`residue_weighted`).  Massive configurations lead to
functions of the regulator ``u`` with at most a simple pole at ``u = 0``
whose regular part is read off a :class:`UExpansion`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DeepPole,
    DomainViolation,
    OutOfTruncationWindow,
    QuadratureNotConverged,
    TruncationMarginExceeded,
)
from .series import LaurentSeries
from .specfun import bessel_k, gamma_laurent, gamma_value

RESIDUE_MARGIN = 4
U_DEPTH = 4


def residue_weighted(s, p: int, margin: int = RESIDUE_MARGIN) -> float:
    """``Res(t**-p * s; 0)``, i.e. the coefficient of ``t**(p-1)`` of ``s``.

    ``s`` may be an exact float (a constant).  The target coefficient must sit
    at least ``margin`` slots below the truncation order.
    """
    k = p - 1
    if not isinstance(s, LaurentSeries):
        return float(s) if k == 0 else 0.0
    if k >= s.trunc_order:
        raise OutOfTruncationWindow(
            f"residue needs t^{k} but the series is known below t^{s.trunc_order} only"
        )
    if s.trunc_order - k < margin:
        raise TruncationMarginExceeded(
            f"t^{k} sits {s.trunc_order - k} slots below the truncation order, need {margin}"
        )
    return s.coefficient(k)


def dirichlet_from_cylinder(s_series, s: float, margin: int = RESIDUE_MARGIN) -> float:
    """``D_s`` at ``s = -n/2`` (``n >= 0``) from the Laurent series of a cylinder kernel.

    Closing the Hankel contour leaves ``e^{-2 pi i s} Gamma(1-2s)`` times the
    residue of ``t**(2s-1) T(t)``, i.e. the coefficient of ``t**(-2s)``.
    """
    n = -2.0 * s
    if n < 0 or not float(n).is_integer():
        raise DomainViolation("the residue route needs s = -n/2 with n a non-negative integer")
    n = int(n)
    return (-1.0) ** n * math.factorial(n) * residue_weighted(s_series, n + 1, margin)


@dataclass(frozen=True)
class UExpansion:
    """A function of the regulator ``u`` near 0.

    ``series`` holds the part that may be singular at ``u = 0``; ``regular``
    is the value at ``u = 0`` of terms already known to be analytic there.
    """

    series: LaurentSeries
    scale_kappa: float = 1.0
    mass: float = 0.0
    regular: float = 0.0

    def __add__(self, other: "UExpansion") -> "UExpansion":
        return UExpansion(self.series + other.series, self.scale_kappa, self.mass,
                          self.regular + other.regular)

    def scaled(self, c: float) -> "UExpansion":
        return UExpansion(self.series * c, self.scale_kappa, self.mass, self.regular * c)

    @property
    def pole(self) -> float:
        return self.series.trim().coefficient(-1)


def rp_at_zero(e: UExpansion) -> float:
    """Regular part at ``u = 0``."""
    s = e.series.trim()
    if s.min_order < -1 and not s.is_zero():
        raise DeepPole(f"pole of order {-s.min_order} at u = 0")
    return s.coefficient(0) + e.regular


def exp_linear(c: float, depth: int = U_DEPTH + 2) -> LaurentSeries:
    """``exp(c u)`` as a series in ``u``."""
    return LaurentSeries(1, [c], depth).exp()


@dataclass(frozen=True)
class GKernel:
    """``G_nu(z2) = z2**(nu/2) K_nu(sqrt(z2))``."""

    nu: float
    z2: float


def gG_eval(g: GKernel) -> float:
    nu = g.nu
    if g.z2 < 0:
        raise DomainViolation("G kernel needs z2 >= 0")
    if g.z2 == 0.0:
        if nu <= 0:
            raise DomainViolation("G_nu(0) is finite only for nu > 0; use gG_zero_series")
        return 2.0 ** (nu - 1.0) * gamma_value(nu)
    if not float(nu).is_integer():
        raise DomainViolation("only integer orders are evaluated away from z2 = 0")
    z = math.sqrt(g.z2)
    return z ** nu * bessel_k(abs(int(nu)), z)


def gG_derivative_shift(g: GKernel, n: int = 1) -> GKernel:
    """Kernel whose value, times ``(-1/2)**n``, is the ``n``-th ``z2`` derivative."""
    return GKernel(g.nu - n, g.z2)


def gG_zero_series(c: float, depth: int = U_DEPTH) -> LaurentSeries:
    """``G_{(u+c)/2}(0) = 2**((u+c)/2 - 1) Gamma((u+c)/2)`` as a series in ``u``."""
    g = gamma_laurent(0.5 * c, depth + 1).series.rescale(0.5)
    return g * exp_linear(0.5 * math.log(2.0), depth + 2) * 2.0 ** (0.5 * c - 1.0)


def rgamma_series(c: float, depth: int = U_DEPTH) -> LaurentSeries:
    """``1 / Gamma((u+c)/2)`` as a series in ``u``."""
    return gamma_laurent(0.5 * c, depth + 1).series.rescale(0.5).invert()


# ---------------------------------------------------------------------------
# keyhole quadrature


def _gl_panels(a: float, b: float, panels: int, order: int = 8):
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(a, b, panels + 1)
    nodes = []
    weights = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        h = 0.5 * (hi - lo)
        nodes.append(lo + h * (x + 1.0))
        weights.append(h * w)
    return np.concatenate(nodes), np.concatenate(weights)


def _keyhole(kernel, s: complex, r0: float, t_max: float, n_points: int) -> complex:
    s = complex(s)
    # the ray is split at a geometric grid so the region near r0 gets resolution
    edges = np.geomspace(r0, t_max, 5)
    ray = 0.0j
    for lo, hi in zip(edges[:-1], edges[1:]):
        nodes, weights = _gl_panels(lo, hi, max(n_points // 4, 1))
        vals = np.array([kernel(complex(t)) for t in nodes])
        ray += np.sum(weights * np.exp((2.0 * s - 1.0) * np.log(nodes)) * vals)
    rays = (cmath.exp(4j * math.pi * s) - 1.0) * ray
    phis, wphi = _gl_panels(0.0, 2.0 * math.pi, max(2 * n_points // 16, 1), 16)
    circ = 0.0j
    for phi, w in zip(phis, wphi):
        t = r0 * cmath.exp(1j * phi)
        # principal argument in [0, 2 pi) along the circle
        tp = cmath.exp((2.0 * s - 1.0) * (math.log(r0) + 1j * phi))
        circ += w * tp * kernel(t) * 1j * t
    total = rays + circ
    return cmath.exp(-2j * math.pi * s) * _gamma_complex(1.0 - 2.0 * s) / (2j * math.pi) * total


def _gamma_complex(z: complex) -> complex:
    from scipy.special import gamma  # complex argument

    return complex(gamma(z))


def hankel_quadrature(kernel, s, r0: float = 0.5, t_max: float = 40.0, n_points: int = 64,
                      rtol: float = 1e-8) -> complex:
    """Mellin-Hankel continuation of ``kernel`` evaluated on a keyhole contour.

    Returns ``e^{-2 pi i s} Gamma(1-2s)/(2 pi i)`` times the contour integral
    of ``t**(2s-1) kernel(t)``.  The result at ``n_points`` is compared with
    the one at ``2*n_points``; disagreement beyond ``rtol`` raises
    :class:`QuadratureNotConverged`.
    """
    coarse = _keyhole(kernel, s, r0, t_max, n_points)
    fine = _keyhole(kernel, s, r0, t_max, 2 * n_points)
    scale = max(abs(fine), 1e-300)
    if abs(fine - coarse) > rtol * scale:
        raise QuadratureNotConverged(
            f"keyhole quadrature changed by {abs(fine - coarse) / scale:.3e} under node doubling"
        )
    return fine


def hankel_self_convergence(kernel, s, r0: float = 0.5, t_max: float = 40.0,
                            n_points: int = 64) -> float:
    """Relative change of the keyhole quadrature under node doubling."""
    coarse = _keyhole(kernel, s, r0, t_max, n_points)
    fine = _keyhole(kernel, s, r0, t_max, 2 * n_points)
    return abs(fine - coarse) / max(abs(fine), 1e-300)
