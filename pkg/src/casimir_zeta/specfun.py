"""Gamma function, its local Laurent expansions and modified Bessel K_n.

The Laurent machinery never differentiates numerically: an expansion about
``c`` is obtained from the log-gamma Taylor series about 1 (integer ``c``) or
1/2 (half-integer ``c``) and then moved to ``c`` with the functional equation
carried out in the series ring.  Bessel functions of integer order use an
ascending series for small arguments, the Steed continued fraction for
moderate ones and the Hankel asymptotic series for large ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainViolation, NonPositiveArgument, PoleAt
from .series import LaurentSeries

EULER_GAMMA = 0.5772156649015328606065

# zeta(2) ... zeta(30), 20+ digits
_ZETA = (
    1.644934066848226436472,
    1.2020569031595942854,
    1.082323233711138191516,
    1.036927755143369926331,
    1.017343061984449139715,
    1.00834927738192282684,
    1.004077356197944339379,
    1.002008392826082214418,
    1.000994575127818085337,
    1.000494188604119464559,
    1.000246086553308048299,
    1.000122713347578489147,
    1.000061248135058704829,
    1.000030588236307020494,
    1.000015282259408651872,
    1.000007637197637899762,
    1.00000381729326499984,
    1.000001908212716553939,
    1.000000953962033872796,
    1.000000476932986787806,
    1.000000238450502727733,
    1.000000119219925965311,
    1.000000059608189051259,
    1.000000029803503514652,
    1.000000014901554828365,
    1.000000007450711789835,
    1.000000003725334024788,
    1.000000001862659723513,
    1.00000000093132743242,
)


def zeta_int(k: int) -> float:
    """Riemann zeta at an integer ``k >= 2``."""
    if k < 2:
        raise ValueError("zeta_int needs k >= 2")
    if k - 2 < len(_ZETA):
        return _ZETA[k - 2]
    # 1 + 2^-k + 3^-k + ... converges to double precision after a few terms here
    return 1.0 + sum(n ** (-float(k)) for n in range(2, 8))


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def gamma_value(x: float) -> float:
    """Gamma function for real ``x`` away from the poles."""
    x = float(x)
    if _is_nonpositive_integer(x):
        raise PoleAt(x)
    return math.gamma(x)


@dataclass(frozen=True)
class GammaExpansion:
    """Laurent expansion of Gamma in the local variable ``w = z - center``."""

    center: float
    series: LaurentSeries

    @property
    def residue(self) -> float:
        return self.series.coefficient(-1)


def _loggamma_base(base: float, n: int) -> LaurentSeries:
    """Taylor series of ``log Gamma(base + w)`` for ``base`` in {1, 1/2}."""
    c = np.zeros(n)
    if base == 1.0:
        c[0] = 0.0
        if n > 1:
            c[1] = -EULER_GAMMA
        for k in range(2, n):
            c[k] = (-1) ** k * zeta_int(k) / k
    else:
        c[0] = 0.5 * math.log(math.pi)
        if n > 1:
            c[1] = -EULER_GAMMA - 2.0 * math.log(2.0)
        for k in range(2, n):
            c[k] = (-1) ** k * (2.0 ** k - 1.0) * zeta_int(k) / k
    return LaurentSeries(0, c, n)


def _gamma_base(base: float, n: int) -> LaurentSeries:
    lg = _loggamma_base(base, n)
    c0 = lg.coefficient(0)
    rest = lg - c0
    return rest.exp() * math.exp(c0)


def gamma_laurent(center: float, depth: int = 4) -> GammaExpansion:
    """Laurent expansion of Gamma about ``center`` with ``depth`` known terms.

    The returned series is known for powers ``min_order .. min_order+depth-1``
    of ``w = z - center``.  At a pole the expansion starts at ``w^-1``.
    """
    if depth < 2:
        raise ValueError("depth must be at least 2")
    center = float(center)
    twice = 2.0 * center
    if twice.is_integer():
        base = 1.0 if center.is_integer() else 0.5
    else:
        # generic centre: nearest point of the lattice near 1 and a Taylor shift
        return _gamma_laurent_generic(center, depth)
    shift = int(round(center - base))
    n = depth + 2
    g = _gamma_base(base, n)
    w = LaurentSeries(1, [1.0], n + 1)
    if shift >= 0:
        # Gamma(base + k + w) = Gamma(base + w) * prod_{j<k} (base + j + w)
        out = g
        for j in range(shift):
            out = out * (w + (base + j))
    else:
        # Gamma(base - k + w) = Gamma(base + w) / prod_{j=1..k} (base - j + w)
        denom = LaurentSeries.constant(1.0, n + 1)
        for j in range(1, -shift + 1):
            denom = denom * (w + (base - j))
        out = g / denom
    out = out.trim()
    out = LaurentSeries(out.min_order, out.coeffs[:depth], out.min_order + depth)
    return GammaExpansion(center, out)


def _gamma_laurent_generic(center: float, depth: int) -> GammaExpansion:
    """Taylor expansion about a regular point via polygamma values."""
    from scipy.special import polygamma  # psi^(k) at non-integer centres

    if _is_nonpositive_integer(center):
        raise PoleAt(center)
    lg = np.zeros(depth)
    for k in range(1, depth):
        lg[k] = float(polygamma(k - 1, center)) / math.factorial(k)
    s = LaurentSeries(0, lg, depth).exp() * gamma_value(center)
    return GammaExpansion(center, s)


# ---------------------------------------------------------------------------
# modified Bessel functions of the second kind

_SMALL_X = 2.0
_LARGE_X = 25.0


def _k01_series(x: float) -> tuple[float, float]:
    """K0 and K1 from the ascending series (A&S 9.6.13 and 9.6.11)."""
    h = 0.5 * x
    lh = math.log(h)
    q = h * h
    # K0 = -(ln(x/2) + gamma) I0 + sum q^k/(k!)^2 H_k
    term = 1.0
    harm = 0.0
    i0 = 1.0
    s0 = 0.0
    k = 0
    while True:
        k += 1
        term *= q / (k * k)
        harm += 1.0 / k
        i0 += term
        s0 += term * harm
        if term < 1e-18 * i0:
            break
    k0 = -(lh + EULER_GAMMA) * i0 + s0
    # K1 = 1/x + ln(x/2) I1 - (h/2) sum q^k/(k!(k+1)!) (psi(k+1) + psi(k+2))
    psi1 = -EULER_GAMMA
    term = 1.0
    i1 = 1.0
    acc = 2.0 * psi1 + 1.0
    k = 0
    psi_k1 = psi1
    while True:
        k += 1
        term *= q / (k * (k + 1))
        psi_k1 += 1.0 / k
        psi_k2 = psi_k1 + 1.0 / (k + 1)
        i1 += term
        acc += term * (psi_k1 + psi_k2)
        if term < 1e-18 * i1:
            break
    k1 = 1.0 / x + lh * h * i1 - 0.5 * h * acc
    return k0, k1


def _k01_steed(x: float) -> tuple[float, float]:
    """K0 and K1 by Steed's continued fraction (Temme's CF2 with order 0)."""
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = d
    delh = d
    q1 = 0.0
    q2 = 1.0
    a1 = 0.25
    q = c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(1, 10000):
        a -= 2 * i
        c = -a * c / (i + 1.0)
        qnew = (q1 - b * q2) / a
        q1 = q2
        q2 = qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < 1e-17:
            break
    k0 = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) / s
    k1 = k0 * (x + 0.5 - a1 * h) / x
    return k0, k1


def _k_asymptotic(nu: int, x: float) -> float:
    mu = 4.0 * nu * nu
    term = 1.0
    total = 1.0
    prev = abs(term)
    for k in range(1, 60):
        term *= (mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        if abs(term) > prev:
            break
        total += term
        prev = abs(term)
        if abs(term) < 1e-17 * abs(total):
            break
    return math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) * total


def _k01(x: float) -> tuple[float, float]:
    if x <= _SMALL_X:
        return _k01_series(x)
    if x < _LARGE_X:
        return _k01_steed(x)
    return _k_asymptotic(0, x), _k_asymptotic(1, x)


def bessel_k(n: int, x: float) -> float:
    """Modified Bessel function of the second kind ``K_n(x)`` for integer ``n``."""
    if int(n) != n:
        raise DomainViolation("only integer orders are supported")
    n = abs(int(n))
    x = float(x)
    if not x > 0.0:
        raise NonPositiveArgument(f"K_n needs x > 0, got {x}")
    if x > 700.0:
        return 0.0
    k0, k1 = _k01(x)
    if n == 0:
        return k0
    km, k = k0, k1
    for nu in range(1, n):
        km, k = k, km + (2.0 * nu / x) * k
    return k
