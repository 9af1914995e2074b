"""Renormalized stress-energy tensors, boundary pressures and reduced energies.

Three assembly routes are used:

* slabs: residues of the reduced cylinder kernel jet in ``t``;
* massive perpendicular planes (d = 3): the Dirichlet kernel as an image sum
  of ``G`` kernels, with the regular part at ``u = 0`` taken on
  :class:`~casimir_zeta.continuation.UExpansion` objects;
* wedges and the cosmic string: residues of the modified cylinder kernel jet
  in the cylindrical frame, with covariant second derivatives.

Every result is returned split into conformal and non-conformal parts.  The
split is exact because each component is affine in ``xi``: the engine
evaluates the ``xi``-independent and the ``xi``-linear coefficients
separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .continuation import (
    UExpansion,
    GKernel,
    exp_linear,
    gG_eval,
    gG_zero_series,
    residue_weighted,
    rgamma_series,
    rp_at_zero,
)
from .errors import (
    CornerPoint,
    DomainViolation,
    EvenDimensionUnsupported,
    GeometryViolation,
)
from .kernels import (
    BoundaryMode,
    WedgeGeometry,
    reduced_cylinder_jet,
    reduced_cylinder_trace,
    wedge_mod_cylinder_jet,
)
from .series import LaurentSeries
from .specfun import gamma_value
from .tensors import (
    BOUNDARY_FIRST,
    CARTESIAN,
    CYLINDRICAL,
    INTERIOR_LIMIT,
    ConformalSplit,
    PressureResult,
    StressTensor,
    frame_transform,
)

__all__ = [
    "ParallelPlanes",
    "HalfSpaceMassive",
    "RectWedgeMassive",
    "AngularWedge",
    "CosmicString",
    "xi_critical",
    "stress_parallel",
    "reduced_energy_parallel",
    "pressure_parallel",
    "stress_halfspace_massive",
    "stress_rectwedge_massive",
    "pressure_perpendicular",
    "stress_wedge",
    "pressure_wedge",
    "frame_transform",
]

PRESSURE_AGREEMENT = 1e-10
CORNER_MARGIN = 1e-6


def xi_critical(d: int) -> float:
    return (d - 1.0) / (4.0 * d)


def _sign(value, name):
    v = float(value)
    if v not in (-1.0, 1.0):
        raise DomainViolation(f"{name} must be -1 (Dirichlet) or +1 (Neumann), got {value}")
    return v


def _positive(value, name):
    v = float(value)
    if not v > 0.0:
        raise DomainViolation(f"{name} must be positive, got {value}")
    return v


# ---------------------------------------------------------------------------
# configurations


@dataclass(frozen=True)
class ParallelPlanes:
    bc: BoundaryMode = BoundaryMode.DD
    a: float = 1.0
    d: int = 3

    def __post_init__(self):
        object.__setattr__(self, "bc", BoundaryMode.parse(self.bc))
        if int(self.d) != self.d or self.d < 2:
            raise DomainViolation(f"spatial dimension must be an integer >= 3, got {self.d}")
        if self.d % 2 == 0:
            raise EvenDimensionUnsupported(f"even spatial dimension {self.d} is not supported")
        if self.d < 3:
            raise DomainViolation("spatial dimension must be at least 3")
        object.__setattr__(self, "d", int(self.d))
        if not self.a > 0.0:
            raise GeometryViolation(f"slab width must be positive, got {self.a}")


@dataclass(frozen=True)
class HalfSpaceMassive:
    alpha1: float
    m: float
    kappa: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "alpha1", _sign(self.alpha1, "alpha1"))
        object.__setattr__(self, "m", _positive(self.m, "m"))
        object.__setattr__(self, "kappa", _positive(self.kappa, "kappa"))

    @property
    def signs(self):
        return (self.alpha1,)


@dataclass(frozen=True)
class RectWedgeMassive:
    alpha1: float
    alpha2: float
    m: float
    kappa: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "alpha1", _sign(self.alpha1, "alpha1"))
        object.__setattr__(self, "alpha2", _sign(self.alpha2, "alpha2"))
        object.__setattr__(self, "m", _positive(self.m, "m"))
        object.__setattr__(self, "kappa", _positive(self.kappa, "kappa"))

    @property
    def signs(self):
        return (self.alpha1, self.alpha2)


@dataclass(frozen=True)
class AngularWedge:
    mode: BoundaryMode
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "mode", BoundaryMode.parse(self.mode))
        if not 0.0 < self.alpha <= 2.0 * math.pi + 1e-15:
            raise GeometryViolation(f"alpha must lie in (0, 2 pi], got {self.alpha}")


@dataclass(frozen=True)
class CosmicString:
    alpha: float

    def __post_init__(self):
        if not 0.0 < self.alpha <= 2.0 * math.pi + 1e-15:
            raise GeometryViolation(f"alpha must lie in (0, 2 pi], got {self.alpha}")

    @property
    def mode(self):
        return BoundaryMode.PERIODIC


def _split_from_affine(t0, t1, xi, xi_d, frame=CARTESIAN, rho=None, theta=None, formula=""):
    """``T(xi) = t0 + xi t1``  ->  conformal / non-conformal parts."""
    conf = np.asarray(t0) + xi_d * np.asarray(t1)
    return ConformalSplit(
        StressTensor(conf, frame, rho, theta),
        StressTensor(t1, frame, rho, theta),
        float(xi),
        xi_d,
        formula,
    )


# ---------------------------------------------------------------------------
# parallel planes

_PLATE_FORMULA = {
    BoundaryMode.DD: "TmnDD",
    BoundaryMode.DN: "TND",
    BoundaryMode.NN: "TNN",
    BoundaryMode.PERIODIC: "TP",
}


def _c_d(d: int) -> float:
    # (-pi)^(-(d-1)/2) with (d-1)/2 an integer
    k = (d - 1) // 2
    return (-1.0) ** k * math.pi ** (-k) * gamma_value((d + 1) / 2.0)


def _plate_coefficients(cfg: ParallelPlanes, x1: float, on_boundary: bool = False):
    """Residue data ``(T_d, dxy_{d-2}, dxx_{d-2})`` at ``x1``."""
    d = cfg.d
    jet = reduced_cylinder_jet(cfg.bc, cfg.a, x1, on_boundary)
    t_diag = jet.constant()
    dxy = jet.partial((1, 1))
    dxx = jet.partial((2, 0))
    return (
        residue_weighted(t_diag, d + 1),
        residue_weighted(dxy, d - 1),
        residue_weighted(dxx, d - 1),
    )


def _plate_affine(cfg: ParallelPlanes, x1: float, on_boundary: bool = False):
    """``(T00, T11)`` as pairs ``(value at xi = 0, coefficient of xi)``."""
    d = cfg.d
    cd = _c_d(d)
    td, rxy, rxx = _plate_coefficients(cfg, x1, on_boundary)
    g = (d - 2.0) / (4.0 * d)
    # T00 = -C_d [ (xi - g) d T_d + (1/4 - xi) rxy / (d-1) ]
    t00 = (-cd * (-g * d * td + 0.25 * rxy / (d - 1.0)), -cd * (d * td - rxy / (d - 1.0)))
    # T11 = -C_d [ (1/4 - xi) d T_d + (rxy/4 - xi rxx) / (d-1) ]
    t11 = (-cd * (0.25 * d * td + 0.25 * rxy / (d - 1.0)), -cd * (-d * td - rxx / (d - 1.0)))
    return t00, t11


def stress_parallel(cfg: ParallelPlanes, xi: float, x1: float) -> ConformalSplit:
    """Stress tensor between parallel hyperplanes at distance ``x1`` from ``pi_0``."""
    if not 0.0 < x1 < cfg.a:
        raise GeometryViolation(f"x1 must lie in (0, {cfg.a}), got {x1}")
    d = cfg.d
    (a00, b00), (a11, b11) = _plate_affine(cfg, x1)
    t0 = np.diag([a00, a11] + [-a00] * (d - 1))
    t1 = np.diag([b00, b11] + [-b00] * (d - 1))
    return _split_from_affine(t0, t1, xi, xi_critical(d), formula=_PLATE_FORMULA[cfg.bc])


_ENERGY_FORMULA = {
    BoundaryMode.DD: "EnDDPP",
    BoundaryMode.DN: "EnDN",
    BoundaryMode.NN: "EnNN",
    BoundaryMode.PERIODIC: "EnP",
}


def reduced_energy_parallel(cfg: ParallelPlanes) -> float:
    """Reduced bulk energy per unit transverse volume.

    The boundary contribution vanishes identically for these configurations
    and is not computed.
    """
    d = cfg.d
    trace = reduced_cylinder_trace(cfg.bc, cfg.a)
    pref = (
        (-1.0) ** (d + 1) * gamma_value(d + 1.0) * gamma_value(-d / 2.0)
        / (2.0 * (4.0 * math.pi) ** (d / 2.0))
    )
    return pref * residue_weighted(trace, d + 1)


def _extrapolate_to_zero(hs, values, deg: int | None = None) -> float:
    """Polynomial extrapolation of ``values(h)`` to ``h = 0``.

    ``deg`` defaults to interpolation through all points; a lower degree
    gives a least-squares fit.
    """
    hs = np.asarray(hs, dtype=float)
    if deg is None:
        deg = len(hs) - 1
    coef = np.polyfit(hs, np.asarray(values, dtype=float), deg)
    return float(coef[-1])


def pressure_parallel(cfg: ParallelPlanes, xi: float, plate: str = "pi0"):
    """Pressure on ``pi0`` (x1 = 0) or ``pia`` (x1 = a), both prescriptions.

    Components are ``(p_1, ..., p_d)`` along the Cartesian axes; the outer
    normal of ``pi0`` is ``-e_1`` and the one of ``pia`` is ``+e_1``.
    """
    if plate not in ("pi0", "pia"):
        raise DomainViolation(f"plate must be 'pi0' or 'pia', got {plate!r}")
    if cfg.bc is BoundaryMode.PERIODIC:
        raise DomainViolation("periodic identification has no boundary plates")
    a = cfg.a
    sign = -1.0 if plate == "pi0" else 1.0
    x_face = 0.0 if plate == "pi0" else a

    def t11(x, on_boundary=False):
        _, (a11, b11) = _plate_affine(cfg, x, on_boundary)
        return a11 + xi * b11

    vec = np.zeros(cfg.d)
    vec[0] = sign * t11(x_face, True)
    first = PressureResult(vec, BOUNDARY_FIRST)
    # series coefficients lose accuracy within ~0.1 a of a plate, so the
    # limit is extrapolated from points further in
    hs = a * np.array([0.25, 0.2, 0.15, 0.1])
    pts = hs if plate == "pi0" else a - hs
    lim = _extrapolate_to_zero(hs, [t11(x) for x in pts], deg=2)
    vec2 = np.zeros(cfg.d)
    vec2[0] = sign * lim
    second = PressureResult(vec2, INTERIOR_LIMIT)
    scale = max(abs(vec[0]), 1e-300)
    if abs(vec[0] - vec2[0]) > PRESSURE_AGREEMENT * scale:
        raise DomainViolation(
            f"pressure prescriptions disagree: {vec[0]!r} vs {vec2[0]!r}"
        )
    return first, second


# ---------------------------------------------------------------------------
# massive perpendicular planes, d = 3
#
# D_s(x, y) = 2^(1-s) m^(3-2s) / ((2 pi)^(3/2) Gamma(s)) sum_J a_J G_{s-3/2}(m^2 |x - R_J y|^2)
# with s = (u -+ 1)/2.  Image terms with a non-zero distance are analytic at
# u = 0 and are evaluated there; coincident terms carry the pole.


def _images(cfg):
    if isinstance(cfg, HalfSpaceMassive):
        a1 = cfg.alpha1
        return [(np.diag([1.0, 1.0, 1.0]), 1.0), (np.diag([-1.0, 1.0, 1.0]), a1)]
    a1, a2 = cfg.alpha1, cfg.alpha2
    return [
        (np.diag([1.0, 1.0, 1.0]), 1.0),
        (np.diag([-1.0, 1.0, 1.0]), a1),
        (np.diag([1.0, -1.0, 1.0]), a2),
        (np.diag([-1.0, -1.0, 1.0]), a1 * a2),
    ]


class _Kernel:
    """Diagonal data of ``kappa^u D_{(u+sigma)/2}`` and its second derivatives."""

    def __init__(self, cfg, x, sigma: int):
        self.cfg = cfg
        self.sigma = sigma
        m, kappa = cfg.m, cfg.kappa
        ln2 = math.log(2.0)
        # prefactor 2^(1-s) m^(3-2s) kappa^u / ((2 pi)^(3/2) Gamma(s)), s = (u+sigma)/2
        c0 = 2.0 ** (1.0 - 0.5 * sigma) * m ** (3.0 - sigma) / (2.0 * math.pi) ** 1.5
        self.pref_series = (
            rgamma_series(sigma)
            * exp_linear(-0.5 * ln2 - math.log(m) + math.log(kappa))
            * c0
        )
        s0 = 0.5 * sigma
        self.pref0 = c0 / gamma_value(s0) if not (s0 <= 0 and float(s0).is_integer()) else 0.0
        self.nu0 = (sigma - 3) // 2  # order of G at u = 0
        self.c_shift = sigma - 3  # G_{(u + c)/2}
        x = np.asarray(x, dtype=float)
        self.x = x
        self.terms = []
        for R, w in _images(cfg):
            e = x - R @ x
            self.terms.append((R, w, e, float(e @ e)))

    def _zero(self, shift: int) -> UExpansion:
        """``pref(u) * G_{nu - shift}(0)`` as a u-expansion."""
        g = gG_zero_series(self.c_shift - 2 * shift)
        return UExpansion(self.pref_series * g, self.cfg.kappa, self.cfg.m)

    def _const(self, v: float) -> UExpansion:
        return UExpansion(LaurentSeries.constant(0.0, 4), self.cfg.kappa, self.cfg.m, v)

    def _g(self, w2: float, shift: int) -> float:
        m2 = self.cfg.m ** 2
        return gG_eval(GKernel(self.nu0 - shift, m2 * w2))

    def value(self) -> UExpansion:
        out = self._const(0.0)
        for R, a, e, w2 in self.terms:
            if w2 == 0.0:
                out = out + self._zero(0).scaled(a)
            else:
                out = out + self._const(a * self.pref0 * self._g(w2, 0))
        return out

    def second(self, i: int, j: int, kind: str) -> UExpansion:
        """``d_{x^i y^j}`` (kind 'xy') or ``d_{x^i x^j}`` (kind 'xx') on the diagonal."""
        m2 = self.cfg.m ** 2
        out = self._const(0.0)
        for R, a, e, w2 in self.terms:
            # g(w) = G(m^2 w); g' = -m^2/2 G_{nu-1}, g'' = m^4/4 G_{nu-2}
            if kind == "xy":
                re_j = (R.T @ e)[j]
                c1 = -2.0 * R[i, j]
                c2 = -4.0 * e[i] * re_j
            else:
                c1 = 2.0 if i == j else 0.0
                c2 = 4.0 * e[i] * e[j]
            if w2 == 0.0:
                if c1 != 0.0:
                    out = out + self._zero(1).scaled(a * c1 * (-0.5 * m2))
            else:
                v = c1 * (-0.5 * m2) * self._g(w2, 1) + c2 * (0.25 * m2 * m2) * self._g(w2, 2)
                out = out + self._const(a * self.pref0 * v)
        return out


def _massive_affine(cfg, x):
    """Affine-in-xi coefficient matrices of the renormalized tensor at ``x``."""
    m2 = cfg.m ** 2
    dm = _Kernel(cfg, x, -1)
    dp = _Kernel(cfg, x, +1)
    Dm = rp_at_zero(dm.value())
    Dp = rp_at_zero(dp.value())
    xy = [[rp_at_zero(dp.second(i, j, "xy")) for j in range(3)] for i in range(3)]
    xx = [[rp_at_zero(dp.second(i, j, "xx")) for j in range(3)] for i in range(3)]
    box = xy[0][0] + xy[1][1] + xy[2][2] + m2 * Dp
    t0 = np.zeros((4, 4))
    t1 = np.zeros((4, 4))
    t0[0, 0] = 0.25 * Dm + 0.25 * box
    t1[0, 0] = Dm - box
    for i in range(3):
        for j in range(3):
            dij = 1.0 if i == j else 0.0
            t0[i + 1, j + 1] = 0.25 * dij * (Dm - box) + 0.5 * xy[i][j]
            t1[i + 1, j + 1] = -dij * (Dm - box) - xy[i][j] - xx[i][j]
    # the image sums are symmetric up to rounding
    t0 = 0.5 * (t0 + t0.T)
    t1 = 0.5 * (t1 + t1.T)
    return t0, t1


def stress_halfspace_massive(cfg: HalfSpaceMassive, xi: float, x1: float) -> ConformalSplit:
    """Massive field in the half-space ``x1 > 0``."""
    if not x1 > 0.0:
        raise GeometryViolation(f"x1 must be positive, got {x1}")
    t0, t1 = _massive_affine(cfg, [x1, 0.0, 0.0])
    return _split_from_affine(t0, t1, xi, xi_critical(3), formula="T1pM")


def stress_rectwedge_massive(cfg: RectWedgeMassive, xi: float, x1: float, x2: float) -> ConformalSplit:
    """Massive field in the quarter-space ``x1, x2 > 0``."""
    if not (x1 > 0.0 and x2 > 0.0):
        raise GeometryViolation(f"need x1, x2 > 0, got ({x1}, {x2})")
    t0, t1 = _massive_affine(cfg, [x1, x2, 0.0])
    return _split_from_affine(t0, t1, xi, xi_critical(3), formula="T2pM")


def pressure_perpendicular(cfg, xi: float, x2: float | None = None):
    """Pressure on the face ``pi_1 = {x1 = 0}``, both prescriptions.

    For the quarter-space ``x2`` locates the point on the face; the edge
    ``x2 = 0`` (and any ``x2`` closer than ``1e-6 / m``) raises
    :class:`CornerPoint`.  Components are Cartesian ``(p_1, p_2, p_3)``.
    """
    if isinstance(cfg, RectWedgeMassive):
        if x2 is None:
            raise DomainViolation("the quarter-space pressure needs x2")
        if not x2 >= CORNER_MARGIN / cfg.m:
            raise CornerPoint(f"x2 = {x2} is on (or too close to) the edge x1 = x2 = 0")
        point = lambda s: [s, x2, 0.0]
    elif isinstance(cfg, HalfSpaceMassive):
        point = lambda s: [s, 0.0, 0.0]
    else:
        raise DomainViolation("pressure_perpendicular needs a massive plane configuration")

    def row(s):
        t0, t1 = _massive_affine(cfg, point(s))
        return -(t0[1:, 1] + xi * t1[1:, 1])

    first = PressureResult(0.0 + row(0.0), BOUNDARY_FIRST)
    # the image sums cancel badly within ~0.01 x2 of the face, so the probe
    # points stay further in; reflection in x1 makes T_11, T_31 even and
    # T_21 odd in x1, which fixes the fitting basis
    h = 0.1 / cfg.m if isinstance(cfg, HalfSpaceMassive) else 0.1 * x2
    hs = h * np.array([1.0, 0.75, 0.5, 0.25])
    rows = np.array([row(s) for s in hs])
    even = np.vander(hs * hs, 4, increasing=True)
    odd = np.column_stack([np.ones_like(hs), hs, hs ** 3, hs ** 5])
    lim = np.array([np.linalg.solve(odd if k == 1 else even, rows[:, k])[0] for k in range(3)])
    second = PressureResult(0.0 + lim, INTERIOR_LIMIT)
    # the pressure can nearly cancel while the stress near the face does not,
    # so agreement is measured against the size of the fitted data
    scale = max(float(np.max(np.abs(first.vector))), float(np.max(np.abs(rows))), 1e-300)
    if np.max(np.abs(first.vector - lim)) > 1e-6 * scale:
        raise DomainViolation(f"pressure prescriptions disagree: {first.vector} vs {lim}")
    return first, second


# ---------------------------------------------------------------------------
# wedges and the cosmic string, cylindrical frame (t, rho, theta, z)

_WEDGE_FORMULA = {
    BoundaryMode.DD: "TDW",
    BoundaryMode.DN: "TDNW",
    BoundaryMode.NN: "TDWNeu",
    BoundaryMode.PERIODIC: "TPW",
}


def _wedge_data(mode, geom: WedgeGeometry, full_jet: bool = True):
    """Residue data of the modified cylinder kernel at ``geom``.

    Returns ``R0`` (the t^2 coefficient on the diagonal), the mixed second
    derivatives ``P[i][j]``, the first derivatives ``F[i]`` and the
    same-point second derivatives ``Q[i][j]`` (t^0 coefficients).

    ``full_jet=False`` builds one small jet per pair of active variables
    instead of a single six-variable jet; the two must agree and the full
    jet is the faster of the two here.
    """
    if full_jet:
        jets = {None: wedge_mod_cylinder_jet(mode, geom)}

        def get(active):
            return jets[None]
    else:
        cache = {}

        def get(active):
            key = tuple(sorted(set(active)))
            if key not in cache:
                cache[key] = wedge_mod_cylinder_jet(mode, geom, active=key)
            return cache[key]

    def unit(*idx):
        mi = [0] * 6
        for k in idx:
            mi[k] += 1
        return tuple(mi)

    base = get((0,))
    R0 = residue_weighted(base.constant(), 3)
    P = np.zeros((3, 3))
    Q = np.zeros((3, 3))
    F = np.zeros(3)
    for i in range(3):
        F[i] = residue_weighted(get((i,)).partial(unit(i)), 1)
        for j in range(3):
            P[i, j] = residue_weighted(get((i, 3 + j)).partial(unit(i, 3 + j)), 1)
            if j >= i:
                Q[i, j] = Q[j, i] = residue_weighted(get((i, j)).partial(unit(i, j)), 1)
    return R0, P, F, Q


def _wedge_affine(R0, P, F, Q, rho):
    """Affine-in-xi coefficient matrices of the cylindrical tensor."""
    a = np.diag([1.0, rho * rho, 1.0])
    ainv = np.diag([1.0, 1.0 / (rho * rho), 1.0])
    lap = float(np.sum(ainv * P))
    # covariant same-point derivatives; Gamma^rho_thth = -rho, Gamma^th_rhoth = 1/rho
    nQ = Q.copy()
    nQ[1, 1] = Q[1, 1] + rho * F[0]
    nQ[0, 1] = nQ[1, 0] = Q[0, 1] - F[1] / rho
    t0 = np.zeros((4, 4))
    t1 = np.zeros((4, 4))
    t0[0, 0] = 0.5 * R0 + 0.25 * lap
    t1[0, 0] = 2.0 * R0 - lap
    t0[1:, 1:] = 0.5 * a * R0 + 0.5 * P - 0.25 * a * lap
    t1[1:, 1:] = -2.0 * a * R0 - P - nQ + a * lap
    t0 = 0.5 * (t0 + t0.T)
    t1 = 0.5 * (t1 + t1.T)
    return t0, t1


def stress_wedge(cfg, xi: float, geom: WedgeGeometry, full_jet: bool = True) -> ConformalSplit:
    """Stress tensor of a wedge (or cosmic string) in the cylindrical frame."""
    mode = cfg.mode
    if abs(geom.alpha - cfg.alpha) > 1e-15 * max(1.0, cfg.alpha):
        raise GeometryViolation("geometry and configuration disagree on alpha")
    if geom.on_boundary and not 0.0 < geom.theta < geom.alpha:
        raise GeometryViolation("stress_wedge needs an interior point")
    R0, P, F, Q = _wedge_data(mode, geom, full_jet)
    t0, t1 = _wedge_affine(R0, P, F, Q, geom.rho)
    return _split_from_affine(
        t0, t1, xi, xi_critical(3), CYLINDRICAL, geom.rho, geom.theta, _WEDGE_FORMULA[mode]
    )


_INTERIOR_FRACTIONS = (0.1, 0.05, 0.025)
_DIVERGENCE_SLOPE = -0.5


def pressure_wedge(cfg: AngularWedge, xi: float, rho: float, face: str = "pi_alpha",
                   interior: bool = True):
    """Pressure on a face of the wedge, both prescriptions.

    Components are covariant cylindrical ``(p_rho, p_theta, p_z)``.  The
    boundary-first value evaluates the regularized stress on the face before
    continuing.  The interior-limit value is probed at
    ``theta = alpha (1 - f)`` for ``f`` in ``_INTERIOR_FRACTIONS``; a log-log
    slope below ``_DIVERGENCE_SLOPE`` marks it divergent and the slope is
    reported as the exponent.  The face ``pi0`` is obtained by the
    reflection ``theta -> alpha - theta`` (not available for the mixed mode,
    whose Neumann face is ``pi_alpha``).  With ``interior=False`` the second
    element of the returned pair is ``None``.
    """
    if isinstance(cfg, CosmicString) or cfg.mode is BoundaryMode.PERIODIC:
        raise DomainViolation("the cosmic string has no boundary")
    if face not in ("pi_alpha", "pi0"):
        raise DomainViolation(f"face must be 'pi_alpha' or 'pi0', got {face!r}")
    if face == "pi0" and cfg.mode is BoundaryMode.DN:
        raise DomainViolation("only the Neumann face pi_alpha is available for the mixed wedge")
    rho = _positive(rho, "rho")
    alpha = cfg.alpha

    def row(t0, t1):
        return (t0[1:, 2] + xi * t1[1:, 2]) / rho

    geom = WedgeGeometry(alpha, rho, alpha, on_boundary=True)
    R0, P, F, Q = _wedge_data(cfg.mode, geom)
    vec = row(*_wedge_affine(R0, P, F, Q, rho))
    refl = np.array([1.0, -1.0, 1.0])
    if not interior:
        if face == "pi0":
            vec = vec * refl
        return PressureResult(vec, BOUNDARY_FIRST, frame=CYLINDRICAL), None

    fr = np.array(_INTERIOR_FRACTIONS)
    rows = []
    for f in fr:
        g = WedgeGeometry(alpha, rho, alpha * (1.0 - f))
        rows.append(row(*_wedge_affine(*_wedge_data(cfg.mode, g), rho)))
    rows = np.array(rows)
    # orthonormal components, so that the fit does not mix powers of rho
    norms = np.linalg.norm(rows * np.array([1.0, 1.0 / rho, 1.0]), axis=1)
    slope = float(np.polyfit(np.log(alpha * fr), np.log(norms), 1)[0])
    if slope < _DIVERGENCE_SLOPE:
        lim = rows[-1]
        second = PressureResult(lim, INTERIOR_LIMIT, finite=False, divergence_exponent=slope,
                                frame=CYLINDRICAL)
    else:
        lim = np.array([_extrapolate_to_zero(alpha * fr, rows[:, k]) for k in range(3)])
        second = PressureResult(lim, INTERIOR_LIMIT, frame=CYLINDRICAL,
                                extra={"fitted_exponent": slope})
    if face == "pi0":
        # outer normal flips; T_{rho theta} is odd under the reflection, T_{theta theta} even
        vec = vec * refl
        second = PressureResult(second.vector * refl, INTERIOR_LIMIT, second.finite,
                                second.divergence_exponent, CYLINDRICAL, second.extra)
    return PressureResult(vec, BOUNDARY_FIRST, frame=CYLINDRICAL), second
