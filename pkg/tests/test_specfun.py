import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from casimir_zeta.errors import NonPositiveArgument, PoleAt
from casimir_zeta.specfun import EULER_GAMMA, bessel_k, gamma_laurent, gamma_value

# 20-digit values from mpmath.besselk
K_TABLE = {
    0.3: (1.3724600605442974106, 3.0559920334573251072, 21.745740283593132212, 292.99919581469909867),
    1.0: (0.42102443824070833334, 0.60190723019723457474, 1.6248388986351774828, 7.101262824737944506),
    2.0: (0.11389387274953343565, 0.13986588181652242728, 0.25375975456605586294, 0.64738539094863415316),
    5.0: (0.0036910983340425942747, 0.0040446134454521642084, 0.0053089437122234599581,
          0.0082917684152309321748),
    25.5: (2.0806153571642787531e-12, 2.1210265673146657533e-12, 2.2469703820517035181e-12,
           2.473492509597285913e-12),
    50.0: (3.4101677497894955139e-23, 3.4441022267175556126e-23, 3.5479318388581977384e-23,
           3.7279367738262114317e-23),
}


def test_gamma_values():
    assert gamma_value(1.0) == 1.0
    assert gamma_value(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert abs(gamma_value(2.3) * 2.3 / gamma_value(3.3) - 1.0) < 1e-13
    with pytest.raises(PoleAt):
        gamma_value(-3.0)


@given(st.floats(0.05, 6.0))
def test_gamma_recurrence(x):
    assert gamma_value(x + 1.0) == pytest.approx(x * gamma_value(x), rel=1e-12)


@given(st.floats(0.02, 0.98))
def test_gamma_reflection(x):
    # kept inside (0, 1): near the integers sin(pi x) itself is ill conditioned
    lhs = gamma_value(x) * gamma_value(1.0 - x)
    assert lhs == pytest.approx(math.pi / math.sin(math.pi * x), rel=1e-12)


@pytest.mark.parametrize("n", range(0, 6))
def test_gamma_laurent_residues(n):
    g = gamma_laurent(-n, 4)
    assert g.series.min_order == -1
    assert g.residue == pytest.approx((-1) ** n / math.factorial(n), rel=1e-13, abs=1e-16)


def test_gamma_laurent_at_one():
    g = gamma_laurent(1.0, 4).series
    assert g.min_order == 0
    assert g.coefficient(0) == pytest.approx(1.0, rel=1e-15)
    assert g.coefficient(1) == pytest.approx(-EULER_GAMMA, rel=1e-15)
    assert EULER_GAMMA == pytest.approx(0.5772156649, abs=1e-10)


def test_gamma_laurent_constant_term_at_pole():
    # lim_{x -> -2} Gamma(x) - (1/2)/(x + 2), mpmath.limit to 30 digits
    g = gamma_laurent(-2.0, 4).series
    assert g.coefficient(-1) == pytest.approx(0.5, rel=1e-15)
    assert g.coefficient(0) == pytest.approx(0.461392167549233569696743954959, rel=1e-7)


@pytest.mark.parametrize("center", [0.5, 2.5, -1.5, 0.3, 3.7])
def test_gamma_laurent_regular_points(center):
    g = gamma_laurent(center, 5).series
    assert g.min_order == 0
    assert g.coefficient(0) == pytest.approx(gamma_value(center), rel=1e-13)
    h = 1e-3
    # Taylor polynomial against direct evaluation nearby
    approx = sum(g.coefficient(k) * h ** k for k in range(5))
    assert approx == pytest.approx(gamma_value(center + h), rel=1e-12)


@pytest.mark.parametrize("x", sorted(K_TABLE))
def test_bessel_against_table(x):
    for n in range(4):
        assert bessel_k(n, x) == pytest.approx(K_TABLE[x][n], rel=1e-12)


@pytest.mark.parametrize("nu", [1, 2])
@pytest.mark.parametrize("x", [0.3, 1.0, 5.0, 1.999, 2.0, 2.001, 24.99, 25.0, 25.01])
def test_bessel_recurrence(nu, x):
    lhs = x * bessel_k(nu + 1, x) - x * bessel_k(nu - 1, x)
    assert lhs == pytest.approx(2 * nu * bessel_k(nu, x), rel=1e-12)


def test_bessel_asymptotics():
    x = 30.0
    lead = math.sqrt(math.pi / (2 * x)) * math.exp(-x)
    assert bessel_k(0, x) == pytest.approx(lead, rel=1e-2)
    assert bessel_k(1, x) == pytest.approx(lead, rel=2e-2)
    # the leading law is reached with the 1/(8x) corrections removed
    assert bessel_k(0, x) == pytest.approx(lead * (1 - 1 / (8 * x)), rel=1e-3)


def test_bessel_integral_representation():
    # K_1(2) = int_0^inf exp(-2 cosh s) cosh s ds, 40-point Gauss-Legendre on [0, 4]
    x, w = np.polynomial.legendre.leggauss(40)
    s = 2.0 * (x + 1.0)
    quad = float(np.sum(2.0 * w * np.exp(-2.0 * np.cosh(s)) * np.cosh(s)))
    assert bessel_k(1, 2.0) == pytest.approx(quad, rel=1e-9)


@given(st.floats(0.05, 60.0))
def test_bessel_crossover_continuity(x):
    for nu in (1, 2):
        lhs = bessel_k(nu + 1, x)
        rhs = bessel_k(nu - 1, x) + 2.0 * nu / x * bessel_k(nu, x)
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_bessel_errors():
    with pytest.raises(NonPositiveArgument):
        bessel_k(1, 0.0)
    with pytest.raises(NonPositiveArgument):
        bessel_k(0, -1.0)
