import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from casimir_zeta import LaurentSeries
from casimir_zeta.continuation import (
    GKernel,
    UExpansion,
    dirichlet_from_cylinder,
    exp_linear,
    gG_derivative_shift,
    gG_eval,
    gG_zero_series,
    hankel_quadrature,
    hankel_self_convergence,
    residue_weighted,
    rgamma_series,
    rp_at_zero,
)
from casimir_zeta.errors import (
    DeepPole,
    DomainViolation,
    OutOfTruncationWindow,
    QuadratureNotConverged,
    TruncationMarginExceeded,
)
from casimir_zeta.kernels import plate_kernel, reduced_cylinder_jet, reduced_cylinder_trace
from casimir_zeta.series import jet_partial
from casimir_zeta.specfun import bessel_k

EULER = 0.57721566490153286061
PI = math.pi


def exp_minus_t(order=20):
    return LaurentSeries(0, [(-1.0) ** k / math.factorial(k) for k in range(order)], order)


# ---------------------------------------------------------------------------
# residues


def test_residue_of_simple_pole():
    s = LaurentSeries(-1, [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0], 6)
    assert residue_weighted(s, 0) == 1.0


def test_residue_picks_weighted_coefficient():
    s = exp_minus_t()
    for p in range(1, 8):
        assert residue_weighted(s, p) == pytest.approx((-1.0) ** (p - 1) / math.factorial(p - 1))


def test_residue_of_constant():
    assert residue_weighted(2.5, 1) == 2.5
    assert residue_weighted(2.5, 3) == 0.0


def test_residue_window_errors():
    s = exp_minus_t(10)
    with pytest.raises(OutOfTruncationWindow):
        residue_weighted(s, 11)
    with pytest.raises(TruncationMarginExceeded):
        residue_weighted(s, 8)


def test_dd_trace_residue_gives_energy():
    # E = Gamma(4) Gamma(-3/2) / (2 (4 pi)^(3/2)) * Res(t^-4 Tr) for d = 3
    tr = reduced_cylinder_trace("dd", 1.0)
    pref = math.gamma(4.0) * math.gamma(-1.5) / (2.0 * (4.0 * PI) ** 1.5)
    assert pref * residue_weighted(tr, 4) == pytest.approx(-PI ** 2 / 1440.0, rel=1e-12)


def test_dirichlet_from_cylinder_on_exponential():
    # e^{-t} has D_s = 1 for every s
    s = exp_minus_t()
    for n in range(6):
        assert dirichlet_from_cylinder(s, -n / 2.0) == pytest.approx(1.0, rel=1e-14)


@pytest.mark.parametrize("s", [0.25, -0.3, 1.0])
def test_dirichlet_from_cylinder_domain(s):
    with pytest.raises(DomainViolation):
        dirichlet_from_cylinder(exp_minus_t(), s)


# ---------------------------------------------------------------------------
# regular parts in u


def test_rp_of_analytic_series():
    e = UExpansion(exp_linear(2.0), regular=0.5)
    assert rp_at_zero(e) == pytest.approx(1.5)
    assert e.pole == 0.0


def test_rp_drops_simple_pole():
    e = UExpansion(LaurentSeries(-1, [3.0, 0.0, 0.0], 2))
    assert rp_at_zero(e) == 0.0
    assert e.pole == 3.0


def test_rp_rejects_double_pole():
    with pytest.raises(DeepPole):
        rp_at_zero(UExpansion(LaurentSeries(-2, [1.0, 0.0, 0.0], 1)))


@pytest.mark.parametrize("m", [0.5, 1.0, 3.0])
def test_rp_gamma_times_mass_power(m):
    # Gamma(u/2) m^(-u) = 2/u - gamma - 2 ln m + O(u)
    g = gG_zero_series(0.0) * 2.0 * exp_linear(-0.5 * math.log(2.0))
    e = UExpansion(g * exp_linear(-math.log(m)))
    assert e.pole == pytest.approx(2.0, rel=1e-14)
    assert rp_at_zero(e) == pytest.approx(-EULER - 2.0 * math.log(m), rel=1e-13, abs=1e-14)


def test_uexpansion_algebra():
    a = UExpansion(exp_linear(1.0), regular=1.0)
    b = UExpansion(LaurentSeries(-1, [1.0, 2.0], 1), regular=-2.0)
    assert rp_at_zero(a + b) == pytest.approx(rp_at_zero(a) + rp_at_zero(b))
    assert rp_at_zero(a.scaled(3.0)) == pytest.approx(3.0 * rp_at_zero(a))


@pytest.mark.parametrize("c", [1.0, 2.0, 3.0, 5.0])
def test_gamma_series_against_direct_values(c):
    u = 1e-3
    g = gG_zero_series(c).evaluate(u)
    assert g == pytest.approx(2.0 ** ((u + c) / 2 - 1) * math.gamma((u + c) / 2), rel=1e-10)
    r = rgamma_series(c).evaluate(u)
    assert r == pytest.approx(1.0 / math.gamma((u + c) / 2), rel=1e-10)


def test_rgamma_vanishes_at_poles():
    r = rgamma_series(0.0)
    assert r.trim().min_order == 1
    assert r.coefficient(1) == pytest.approx(0.5, rel=1e-14)


# ---------------------------------------------------------------------------
# G kernels


def test_g_at_origin():
    assert gG_eval(GKernel(2.0, 0.0)) == pytest.approx(2.0)
    assert gG_eval(GKernel(0.5, 0.0)) == pytest.approx(math.sqrt(PI / 2.0))
    with pytest.raises(DomainViolation):
        gG_eval(GKernel(0.0, 0.0))
    with pytest.raises(DomainViolation):
        gG_eval(GKernel(1.0, -1.0))


def test_g_large_argument_asymptotics():
    z = 25.0
    asym = math.sqrt(PI / (2 * z)) * math.exp(-z) * (1 + 3 / (8 * z) - 15 / (128 * z * z))
    assert gG_eval(GKernel(1.0, z * z)) / z == pytest.approx(asym, rel=1e-4)


def test_g_origin_limit_is_continuous():
    assert gG_eval(GKernel(2.0, 1e-12)) == pytest.approx(2.0, rel=1e-10)


@given(st.floats(0.1, 20.0), st.integers(1, 3))
def test_g_derivative_shift(z2, nu):
    # dG_nu/dz2 = -G_{nu-1}/2
    h = 1e-5 * z2
    g = GKernel(float(nu), z2)
    fd = (gG_eval(GKernel(nu, z2 + h)) - gG_eval(GKernel(nu, z2 - h))) / (2 * h)
    assert fd == pytest.approx(-0.5 * gG_eval(gG_derivative_shift(g)), rel=1e-6)


def test_g_matches_bessel():
    assert gG_eval(GKernel(1.0, 4.0)) == pytest.approx(2.0 * bessel_k(1, 2.0), rel=1e-15)


# ---------------------------------------------------------------------------
# keyhole quadrature


@pytest.mark.parametrize("s", [-1.5, -0.25, 0.3 + 0.2j])
def test_hankel_on_exponential(s):
    val = hankel_quadrature(lambda t: cmath.exp(-t), s)
    assert abs(val - 1.0) < 1e-9


@pytest.mark.parametrize("bc,x,r0", [("dd", 0.5, 0.5), ("dd", 0.3, 0.25), ("periodic", 0.3, 0.4)])
@pytest.mark.parametrize("s", [-0.5, -1.5, -2.5])
def test_residue_vs_hankel(bc, x, r0, s):
    diag = jet_partial(reduced_cylinder_jet(bc, 1.0, x), (0, 0))
    kernel = lambda t: plate_kernel(bc, 1.0, x, x, t)
    quad = hankel_quadrature(kernel, s, r0=r0, rtol=1e-6)
    assert quad.real == pytest.approx(dirichlet_from_cylinder(diag, s), rel=1e-6)
    assert abs(quad.imag) < 1e-8 * abs(quad)


def test_hankel_self_convergence():
    kernel = lambda t: plate_kernel("dd", 1.0, 0.5, 0.5, t)
    assert hankel_self_convergence(kernel, -1.5) < 1e-8


def test_hankel_linearity():
    f = lambda t: cmath.exp(-t)
    g = lambda t: plate_kernel("dd", 1.0, 0.4, 0.4, t)
    s = -0.5
    lhs = hankel_quadrature(lambda t: 2.0 * f(t) - 3.0 * g(t), s)
    rhs = 2.0 * hankel_quadrature(f, s) - 3.0 * hankel_quadrature(g, s)
    assert abs(lhs - rhs) < 1e-10 * abs(rhs)


def test_hankel_reports_nonconvergence():
    # a rapidly oscillating kernel is not resolved by a handful of nodes
    with pytest.raises(QuadratureNotConverged):
        hankel_quadrature(lambda t: cmath.exp(-t) * cmath.cos(40.0 * t), -0.5, n_points=8)
