"""Cylinder kernels for slabs and modified cylinder kernels for wedges.

Two representations are offered for every kernel:

* jets over Laurent series in ``t`` about ``t = 0`` built from the closed
  forms (used by the residue engine), and
* plain numeric evaluators of the same closed forms, together with the
  eigenfunction sums they resum (used only as oracles).

Slab kernels are those of the reduced one dimensional problem on ``(0, a)``
with the zero mode of the Neumann and periodic cases removed.  Wedge kernels
live on the three dimensional wedge ``0 < theta < alpha``; the periodic mode
is the cosmic string of angle ``alpha``.

The auxiliary deformation of the operator needed when zero sits at the bottom
of the continuous spectrum is never built: the residue formulas used by the
engine already contain its limit.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import GeometryViolation, TruncationMarginExceeded
from .series import (
    JetSeries,
    LaurentSeries,
    jcos_sin,
    jinv,
    jlog1p,
    jsqrt,
    snapped_cos_sin,
)


class BoundaryMode(enum.Enum):
    DD = "dd"
    DN = "dn"
    NN = "nn"
    PERIODIC = "periodic"

    @classmethod
    def parse(cls, value) -> "BoundaryMode":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        aliases = {
            "dirichlet": "dd",
            "neumann": "nn",
            "p": "periodic",
            "string": "periodic",
            "dirichlet-neumann": "dn",
        }
        key = aliases.get(key, key)
        for m in cls:
            if m.value == key:
                return m
        raise ValueError(f"unknown boundary mode {value!r}")


@dataclass(frozen=True)
class WedgeGeometry:
    """A point ``(rho, theta)`` of the wedge ``0 < theta < alpha``.

    ``on_boundary=True`` admits ``theta`` equal to 0 or ``alpha``; it is used
    only by the boundary-first pressure.
    """

    alpha: float
    rho: float
    theta: float
    on_boundary: bool = False

    def __post_init__(self):
        if not 0.0 < self.alpha <= 2.0 * math.pi + 1e-15:
            raise GeometryViolation(f"alpha must lie in (0, 2 pi], got {self.alpha}")
        if not self.rho > 0.0:
            raise GeometryViolation(f"rho must be positive, got {self.rho}")
        if self.on_boundary:
            if not 0.0 <= self.theta <= self.alpha:
                raise GeometryViolation("theta outside [0, alpha]")
        elif not 0.0 < self.theta < self.alpha:
            raise GeometryViolation(f"theta must lie in (0, alpha), got {self.theta}")


def _check_slab(a: float, x1: float, on_boundary: bool = False) -> None:
    if not a > 0.0:
        raise GeometryViolation(f"slab width must be positive, got {a}")
    if on_boundary:
        if not 0.0 <= x1 <= a:
            raise GeometryViolation(f"x1 must lie in [0, {a}], got {x1}")
    elif not 0.0 < x1 < a:
        raise GeometryViolation(f"x1 must lie in (0, {a}), got {x1}")


def _t_series(c: float = 1.0) -> LaurentSeries:
    return LaurentSeries(1, [c])


# ---------------------------------------------------------------------------
# slabs


def reduced_cylinder_jet(bc, a: float, x1: float, on_boundary: bool = False) -> JetSeries:
    """Reduced slab cylinder kernel ``T(t; x1 + dx, x1 + dy)`` as a 2-variable jet.

    ``on_boundary=True`` admits the plates ``x1 = 0`` and ``x1 = a``.
    """
    bc = BoundaryMode.parse(bc)
    _check_slab(a, x1, on_boundary)
    dx = JetSeries.variable(0, 2)
    dy = JetSeries.variable(1, 2)
    if bc is BoundaryMode.PERIODIC:
        tau = _t_series(2.0 * math.pi / a)
        ch, sh = tau.cosh(), tau.sinh()
        cos_m, _ = jcos_sin((dx - dy) * (2.0 * math.pi / a), 0.0)
        d = -cos_m + ch
        return (jinv(d) * sh - 1.0) * (1.0 / a)
    k = math.pi / a
    tau = _t_series(k)
    phi_p0 = 2.0 * k * x1
    if bc is BoundaryMode.DN:
        h = _t_series(0.5 * k)
        ch, sh_half = tau.cosh(), h.sinh()
        cos_m, _ = jcos_sin((dx - dy) * k, 0.0)
        cos_p, _ = jcos_sin((dx + dy) * k, phi_p0)
        chm, _ = jcos_sin((dx - dy) * (0.5 * k), 0.0)
        chp, _ = jcos_sin((dx + dy) * (0.5 * k), 0.5 * phi_p0)
        inv_m = jinv(-cos_m + ch)
        inv_p = jinv(-cos_p + ch)
        return (chm * inv_m - chp * inv_p) * sh_half * (1.0 / a)
    ch, sh = tau.cosh(), tau.sinh()
    cos_m, _ = jcos_sin((dx - dy) * k, 0.0)
    cos_p, _ = jcos_sin((dx + dy) * k, phi_p0)
    inv_m = jinv(-cos_m + ch)
    inv_p = jinv(-cos_p + ch)
    if bc is BoundaryMode.DD:
        return (inv_m - inv_p) * sh * (0.5 / a)
    return ((inv_m + inv_p) * sh - 2.0) * (0.5 / a)


def reduced_cylinder_trace(bc, a: float) -> LaurentSeries:
    """Laurent expansion of the trace of the reduced slab cylinder kernel."""
    bc = BoundaryMode.parse(bc)
    if not a > 0.0:
        raise GeometryViolation("slab width must be positive")
    if bc is BoundaryMode.DN:
        return (_t_series(0.5 * math.pi / a).sinh() * 2.0).invert()
    if bc is BoundaryMode.PERIODIC:
        return ((_t_series(2.0 * math.pi / a).exp() - 1.0) * 0.5).invert()
    return (_t_series(math.pi / a).exp() - 1.0).invert()


def plate_kernel(bc, a: float, x: float, y: float, t):
    """Closed form slab cylinder kernel; ``t`` may be complex."""
    bc = BoundaryMode.parse(bc)
    if bc is BoundaryMode.PERIODIC:
        tau = 2.0 * math.pi * t / a
        phi = 2.0 * math.pi * (x - y) / a
        return (cmath.sinh(tau) / (cmath.cosh(tau) - math.cos(phi)) - 1.0) / a
    tau = math.pi * t / a
    pm = math.pi * (x - y) / a
    pp = math.pi * (x + y) / a
    dm = cmath.cosh(tau) - math.cos(pm)
    dp = cmath.cosh(tau) - math.cos(pp)
    if bc is BoundaryMode.DD:
        return cmath.sinh(tau) * (1.0 / dm - 1.0 / dp) / (2.0 * a)
    if bc is BoundaryMode.NN:
        return (cmath.sinh(tau) * (1.0 / dm + 1.0 / dp) - 2.0) / (2.0 * a)
    return cmath.sinh(0.5 * tau) * (math.cos(0.5 * pm) / dm - math.cos(0.5 * pp) / dp) / a


def plate_trace(bc, a: float, t):
    bc = BoundaryMode.parse(bc)
    tau = math.pi * t / a
    if bc is BoundaryMode.DN:
        return 1.0 / (2.0 * cmath.sinh(0.5 * tau))
    if bc is BoundaryMode.PERIODIC:
        return 2.0 / (cmath.exp(2.0 * tau) - 1.0)
    return 1.0 / (cmath.exp(tau) - 1.0)


def plate_kernel_eigen(bc, a: float, x: float, y: float, t: float, nmax: int = 10_000,
                       tol: float = 1e-17) -> float:
    """Eigenfunction sum of the slab cylinder kernel, stopped at ``nmax`` terms."""
    bc = BoundaryMode.parse(bc)
    if not t > 0:
        raise GeometryViolation("eigenfunction sums need t > 0")
    total = 0.0
    for n in range(1, nmax + 1):
        if bc is BoundaryMode.DD:
            lam = n * math.pi / a
            term = 2.0 / a * math.sin(lam * x) * math.sin(lam * y)
        elif bc is BoundaryMode.NN:
            lam = n * math.pi / a
            term = 2.0 / a * math.cos(lam * x) * math.cos(lam * y)
        elif bc is BoundaryMode.DN:
            lam = (n - 0.5) * math.pi / a
            term = 2.0 / a * math.sin(lam * x) * math.sin(lam * y)
        else:
            lam = 2.0 * n * math.pi / a
            term = 2.0 / a * math.cos(lam * (x - y))
        decay = math.exp(-lam * t)
        total += term * decay
        if decay < tol:
            break
    return total


# ---------------------------------------------------------------------------
# wedges

WEDGE_VARS = ("rho", "theta", "z", "rho'", "theta'", "z'")


def _hyperbolic(w: JetSeries, v: JetSeries, beta: float) -> tuple[JetSeries, JetSeries]:
    """Jets of ``cosh(beta v)`` and ``sinh(beta v)`` with ``v = log1p(w)``.

    The constant parts use ``exp(beta v0) = (1 + w0) ** beta`` so that the
    leading ``1`` is exact and ``cosh - 1`` trims cleanly.
    """
    w0 = w.constant()
    e = (w0 + 1.0).pow_real(beta)
    ei = e.invert()
    ch = ((e + ei) * 0.5).trim()
    sh = ((e - ei) * 0.5).trim()
    y = v * beta
    return y.compose(ch, sh, ch), y.compose(sh, ch, sh)


def _wedge_seeds(active) -> list[JetSeries]:
    seeds = []
    for i in range(6):
        if active is None or i in active:
            seeds.append(JetSeries.variable(i, 6))
        else:
            seeds.append(JetSeries(6))
    return seeds


def wedge_mod_cylinder_jet(mode, geom: WedgeGeometry, active=None,
                           zero_mode_weight: float = 0.5) -> JetSeries:
    """Modified cylinder kernel ``T~(t; q + dq, q + dq')`` of a wedge as a jet.

    Variables are ordered as ``WEDGE_VARS``.  ``active`` restricts the
    perturbation to a subset of them (the others are frozen at zero), which
    keeps the jets small when only one pair of derivatives is needed.
    ``zero_mode_weight`` is the weight of the constant angular mode in the
    Neumann case; 1/2 is the orthonormal value.
    """
    mode = BoundaryMode.parse(mode)
    if not isinstance(geom, WedgeGeometry):
        raise GeometryViolation("wedge kernels need a WedgeGeometry")
    rho, theta, alpha = geom.rho, geom.theta, geom.alpha
    d_r, d_th, d_z, d_rp, d_thp, d_zp = _wedge_seeds(active)
    t2 = LaurentSeries(2, [1.0])
    dr = d_r - d_rp
    dz = d_z - d_zp
    sr = d_r + d_rp + 2.0 * rho
    lateral = dz * dz
    rm = jsqrt(dr * dr + lateral + t2)
    rp = jsqrt(sr * sr + lateral + t2)
    q = rm * jinv(rp)
    w = q * jinv(1.0 - q) * 2.0
    v = jlog1p(w)
    pref = jinv(rm * rp) * (1.0 / (math.pi * alpha))
    beta = math.pi / alpha
    if mode is BoundaryMode.PERIODIC:
        ch2, sh2 = _hyperbolic(w, v, 2.0 * beta)
        cos_m, _ = jcos_sin((d_th - d_thp) * (2.0 * beta), 0.0)
        out = sh2 * jinv(ch2 - cos_m) * pref
    elif mode is BoundaryMode.DN:
        ch, _ = _hyperbolic(w, v, beta)
        _, sh_half = _hyperbolic(w, v, 0.5 * beta)
        cos_m, _ = jcos_sin((d_th - d_thp) * beta, 0.0)
        cos_p, _ = jcos_sin((d_th + d_thp) * beta, 2.0 * beta * theta)
        hm, _ = jcos_sin((d_th - d_thp) * (0.5 * beta), 0.0)
        hp, _ = jcos_sin((d_th + d_thp) * (0.5 * beta), beta * theta)
        out = (hm * jinv(ch - cos_m) - hp * jinv(ch - cos_p)) * sh_half * pref
    else:
        ch, sh = _hyperbolic(w, v, beta)
        cos_m, _ = jcos_sin((d_th - d_thp) * beta, 0.0)
        cos_p, _ = jcos_sin((d_th + d_thp) * beta, 2.0 * beta * theta)
        inv_m = jinv(ch - cos_m)
        inv_p = jinv(ch - cos_p)
        if mode is BoundaryMode.DD:
            out = (inv_m - inv_p) * sh * 0.5 * pref
        else:
            out = (inv_m + inv_p) * sh * 0.5 * pref
            if zero_mode_weight != 0.5:
                # extra constant angular mode, as in the non-orthonormal variant
                out = out + pref * (2.0 * (zero_mode_weight - 0.5))
    out = out.trim_constant()
    c = out.constant()
    if isinstance(c, LaurentSeries):
        val = c.valuation()
        if val is not None and val < -2:
            raise TruncationMarginExceeded(f"wedge kernel has a pole of order {-val} in t")
    return out


def wedge_mod_kernel(mode, alpha: float, q, p, t, zero_mode_weight: float = 0.5):
    """Closed form modified cylinder kernel of the wedge; ``t`` may be complex."""
    mode = BoundaryMode.parse(mode)
    rho, theta, z = q
    rho_p, theta_p, z_p = p
    lat = (z - z_p) ** 2 + t * t
    rm = cmath.sqrt((rho - rho_p) ** 2 + lat)
    rp = cmath.sqrt((rho + rho_p) ** 2 + lat)
    v = -cmath.log((rp - rm) / (rp + rm))
    beta = math.pi / alpha
    pref = 1.0 / (math.pi * alpha * rm * rp)
    pm = beta * (theta - theta_p)
    pp = beta * (theta + theta_p)
    y = beta * v
    if mode is BoundaryMode.PERIODIC:
        return pref * cmath.sinh(2 * y) / (cmath.cosh(2 * y) - math.cos(2 * pm))
    dm = cmath.cosh(y) - math.cos(pm)
    dp = cmath.cosh(y) - math.cos(pp)
    if mode is BoundaryMode.DN:
        return pref * cmath.sinh(0.5 * y) * (math.cos(0.5 * pm) / dm - math.cos(0.5 * pp) / dp)
    if mode is BoundaryMode.DD:
        return 0.5 * pref * cmath.sinh(y) * (1.0 / dm - 1.0 / dp)
    out = 0.5 * pref * cmath.sinh(y) * (1.0 / dm + 1.0 / dp)
    return out + pref * 2.0 * (zero_mode_weight - 0.5)


def wedge_cyl_kernel(mode, alpha: float, q, p, t: float, h: float = 1e-20) -> float:
    """Cylinder kernel ``T = -dT~/dt`` of the wedge by a complex step derivative."""
    return -(wedge_mod_kernel(mode, alpha, q, p, complex(t, h)).imag) / h


def wedge_mod_kernel_eigen(mode, alpha: float, q, p, t: float, nmax: int = 10_000,
                           tol: float = 1e-17) -> float:
    """Angular eigenfunction sum of the wedge modified cylinder kernel."""
    mode = BoundaryMode.parse(mode)
    if not t > 0:
        raise GeometryViolation("eigenfunction sums need t > 0")
    rho, theta, z = q
    rho_p, theta_p, z_p = p
    lat = (z - z_p) ** 2 + t * t
    rm = math.sqrt((rho - rho_p) ** 2 + lat)
    rp = math.sqrt((rho + rho_p) ** 2 + lat)
    v = -math.log((rp - rm) / (rp + rm))
    pref = 1.0 / (math.pi * alpha * rho * rho_p * math.sinh(v))
    total = 0.0
    if mode is BoundaryMode.PERIODIC:
        total = 0.5
        for n in range(1, nmax + 1):
            lam = 2.0 * n * math.pi / alpha
            e = math.exp(-lam * v)
            total += e * math.cos(lam * (theta - theta_p))
            if e < tol:
                break
        return pref * total
    if mode is BoundaryMode.NN:
        total = 0.5
    start = 0 if mode is BoundaryMode.DN else 1
    for n in range(start, nmax + 1):
        lam = (n + (0.5 if mode is BoundaryMode.DN else 0.0)) * math.pi / alpha
        e = math.exp(-lam * v)
        if mode is BoundaryMode.NN:
            total += e * math.cos(lam * theta) * math.cos(lam * theta_p)
        else:
            total += e * math.sin(lam * theta) * math.sin(lam * theta_p)
        if e < tol:
            break
    return pref * total


@dataclass(frozen=True)
class KernelDescriptor:
    """Names a numeric kernel: ``family`` is one of ``plate``, ``plate_trace``,
    ``wedge_mod`` or ``wedge_cyl``."""

    family: str
    mode: BoundaryMode
    a: float = 1.0
    alpha: float = math.pi


def kernel_numeric(desc: KernelDescriptor, points, t):
    """Evaluate the closed form kernel named by ``desc`` at ``points`` and ``t``."""
    fam = desc.family
    if fam == "plate":
        x, y = points
        for s in (x, y):
            if not 0.0 <= s <= desc.a:
                raise GeometryViolation("point outside the slab")
        return plate_kernel(desc.mode, desc.a, x, y, t)
    if fam == "plate_trace":
        return plate_trace(desc.mode, desc.a, t)
    if fam in ("wedge_mod", "wedge_cyl"):
        q, p = points
        for pt in (q, p):
            if pt[0] <= 0 or not 0.0 <= pt[1] <= desc.alpha:
                raise GeometryViolation("point outside the wedge")
        if fam == "wedge_mod":
            return wedge_mod_kernel(desc.mode, desc.alpha, q, p, t)
        return wedge_cyl_kernel(desc.mode, desc.alpha, q, p, t)
    raise GeometryViolation(f"unknown kernel family {fam!r}")


__all__ = [
    "BoundaryMode",
    "KernelDescriptor",
    "WEDGE_VARS",
    "WedgeGeometry",
    "kernel_numeric",
    "plate_kernel",
    "plate_kernel_eigen",
    "plate_trace",
    "reduced_cylinder_jet",
    "reduced_cylinder_trace",
    "wedge_cyl_kernel",
    "wedge_mod_cylinder_jet",
    "wedge_mod_kernel",
    "wedge_mod_kernel_eigen",
    "snapped_cos_sin",
]
