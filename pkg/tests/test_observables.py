import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casimir_zeta.errors import (
    CornerPoint,
    DomainViolation,
    EvenDimensionUnsupported,
    GeometryViolation,
)
from casimir_zeta.kernels import BoundaryMode, WedgeGeometry
from casimir_zeta.observables import (
    AngularWedge,
    CosmicString,
    HalfSpaceMassive,
    ParallelPlanes,
    RectWedgeMassive,
    pressure_parallel,
    pressure_perpendicular,
    pressure_wedge,
    reduced_energy_parallel,
    stress_halfspace_massive,
    stress_parallel,
    stress_rectwedge_massive,
    stress_wedge,
    xi_critical,
)
from casimir_zeta.tensors import BOUNDARY_FIRST, CYLINDRICAL, INTERIOR_LIMIT

PI = math.pi
PI2 = PI * PI


def close(a, b, rtol, atol=0.0):
    a, b = np.asarray(a), np.asarray(b)
    return np.max(np.abs(a - b)) <= rtol * np.max(np.abs(b)) + atol


# ---------------------------------------------------------------------------
# configurations


def test_xi_critical():
    assert xi_critical(3) == pytest.approx(1.0 / 6.0)
    assert xi_critical(5) == pytest.approx(0.2)


def test_configuration_validation():
    with pytest.raises(EvenDimensionUnsupported):
        ParallelPlanes("dd", 1.0, 4)
    with pytest.raises(DomainViolation):
        ParallelPlanes("dd", 1.0, 1)
    with pytest.raises(GeometryViolation):
        ParallelPlanes("dd", -1.0)
    with pytest.raises(ValueError):
        ParallelPlanes("robin")
    with pytest.raises(DomainViolation):
        HalfSpaceMassive(0.5, 1.0)
    with pytest.raises(DomainViolation):
        HalfSpaceMassive(-1.0, 0.0)
    with pytest.raises(DomainViolation):
        RectWedgeMassive(-1.0, -1.0, 1.0, kappa=-2.0)
    with pytest.raises(GeometryViolation):
        AngularWedge("dd", 7.0)
    with pytest.raises(GeometryViolation):
        CosmicString(0.0)
    assert ParallelPlanes("dirichlet").bc is BoundaryMode.DD
    assert CosmicString(PI).mode is BoundaryMode.PERIODIC


def test_geometry_violations():
    with pytest.raises(GeometryViolation):
        stress_parallel(ParallelPlanes(), 0.0, 1.0)
    with pytest.raises(GeometryViolation):
        stress_halfspace_massive(HalfSpaceMassive(-1, 1), 0.0, 0.0)
    with pytest.raises(GeometryViolation):
        stress_rectwedge_massive(RectWedgeMassive(-1, -1, 1), 0.0, 1.0, -0.1)
    with pytest.raises(GeometryViolation):
        WedgeGeometry(PI / 3, 1.0, PI / 3)
    with pytest.raises(GeometryViolation):
        stress_wedge(AngularWedge("dd", PI / 3), 0.0, WedgeGeometry(PI / 2, 1.0, 0.3))


# ---------------------------------------------------------------------------
# parallel planes


def test_dd_classical_tensor():
    t = stress_parallel(ParallelPlanes("dd"), 1.0 / 6.0, 0.3).total
    assert close(t.components, PI2 / 1440.0 * np.diag([-1.0, -3.0, 1.0, 1.0]), 1e-12)


def test_dd_nonconformal_at_midpoint():
    s = stress_parallel(ParallelPlanes("dd"), 0.0, 0.5)
    assert -s.nonconformal[0, 0] == pytest.approx(-PI2 / 8.0, rel=1e-12)
    assert s.nonconformal[2, 2] == pytest.approx(-PI2 / 8.0, rel=1e-12)
    assert s.nonconformal[1, 1] == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("x", [0.1, 0.37, 0.9])
def test_periodic_is_uniform(x):
    t = stress_parallel(ParallelPlanes("periodic"), 0.25, x).total
    assert t[0, 0] == pytest.approx(-PI2 / 90.0, rel=1e-12)
    assert np.max(np.abs(stress_parallel(ParallelPlanes("periodic"), 0.0, x).nonconformal.components)) < 1e-12


def test_nn_and_dd_share_conformal_part():
    for x in (0.2, 0.6):
        a = stress_parallel(ParallelPlanes("nn"), 0.0, x)
        b = stress_parallel(ParallelPlanes("dd"), 0.0, x)
        assert close(a.conformal.components, b.conformal.components, 1e-11)
        assert close(a.nonconformal.components, -b.nonconformal.components, 1e-11)


def test_formula_tags():
    assert stress_parallel(ParallelPlanes("dn"), 0.0, 0.5).paper_eq == "TND"
    assert stress_wedge(CosmicString(PI), 0.0, WedgeGeometry(PI, 1.0, 1.0)).paper_eq == "TPW"


@pytest.mark.parametrize("bc,value", [
    ("dd", -PI2 / 1440.0), ("nn", -PI2 / 1440.0), ("dn", 7.0 * PI2 / 11520.0), ("periodic", -PI2 / 90.0),
])
def test_reduced_energies(bc, value):
    assert reduced_energy_parallel(ParallelPlanes(bc)) == pytest.approx(value, rel=1e-12)


def test_energy_scales_as_inverse_cube():
    e1 = reduced_energy_parallel(ParallelPlanes("dn", 1.0))
    e2 = reduced_energy_parallel(ParallelPlanes("dn", 2.0))
    assert e2 == pytest.approx(e1 / 8.0, rel=1e-12)


@pytest.mark.parametrize("bc,sign", [("dd", 1.0), ("nn", 1.0), ("dn", -1.0)])
def test_plate_pressures(bc, sign):
    A = 7.0 * PI2 / 11520.0 if bc == "dn" else PI2 / 1440.0
    for plate, s in (("pi0", 1.0), ("pia", -1.0)):
        first, second = pressure_parallel(ParallelPlanes(bc), 0.3, plate)
        assert first.prescription == BOUNDARY_FIRST and second.prescription == INTERIOR_LIMIT
        assert first.vector[0] == pytest.approx(s * sign * 3.0 * A, rel=1e-10)
        assert second.vector[0] == pytest.approx(first.vector[0], rel=1e-10)
        assert first.vector[1:] == pytest.approx([0.0, 0.0])


def test_plate_pressure_errors():
    with pytest.raises(DomainViolation):
        pressure_parallel(ParallelPlanes("periodic"), 0.0)
    with pytest.raises(DomainViolation):
        pressure_parallel(ParallelPlanes("dd"), 0.0, "middle")


@pytest.mark.parametrize("d", [3, 5])
@pytest.mark.parametrize("bc", ["dd", "dn", "nn", "periodic"])
def test_traceless_at_critical_coupling(d, bc):
    t = stress_parallel(ParallelPlanes(bc, 1.0, d), xi_critical(d), 0.35).total
    assert t.dim == d + 1
    assert abs(t.trace()) < 1e-10 * np.max(np.abs(t.components))


@settings(max_examples=20)
@given(st.floats(0.5, 3.0), st.floats(0.05, 0.95), st.sampled_from(["dd", "dn", "nn"]))
def test_plate_scaling(a, frac, bc):
    t1 = stress_parallel(ParallelPlanes(bc, 1.0), 0.1, frac).total.components
    ta = stress_parallel(ParallelPlanes(bc, a), 0.1, frac * a).total.components
    assert close(ta, t1 / a ** 4, 1e-10)


def test_d5_scaling():
    t1 = stress_parallel(ParallelPlanes("dd", 1.0, 5), 0.1, 0.3).total.components
    t2 = stress_parallel(ParallelPlanes("dd", 2.0, 5), 0.1, 0.6).total.components
    assert close(t2, t1 / 2.0 ** 6, 1e-10)


# ---------------------------------------------------------------------------
# massive perpendicular planes


@pytest.mark.parametrize("a1", [-1.0, 1.0])
@pytest.mark.parametrize("x", [0.5, 2.0])
def test_halfspace_normal_component(a1, x):
    s = stress_halfspace_massive(HalfSpaceMassive(a1, 1.0), 0.3, x)
    expect = -(4.0 * math.log(0.5) - 3.0) / (128.0 * PI2)
    assert s.total[1, 1] == pytest.approx(expect, rel=1e-10)
    assert expect == pytest.approx(4.5699e-3, rel=2e-4)


def test_halfspace_dirichlet_energy_density():
    from scipy.special import kv

    s = stress_halfspace_massive(HalfSpaceMassive(-1.0, 1.0), 1.0 / 6.0, 1.0)
    expect = (3.0 * (4.0 * math.log(0.5) + 1.0) - 32.0 * kv(1, 2.0) / 2.0) / (384.0 * PI2)
    assert s.conformal[0, 0] == pytest.approx(expect, rel=1e-10)


def test_kappa_enters_only_through_the_log():
    a = stress_halfspace_massive(HalfSpaceMassive(-1.0, 1.0, 1.0), 0.2, 1.0).total.components
    b = stress_halfspace_massive(HalfSpaceMassive(-1.0, 1.0, 2.0), 0.2, 1.0).total.components
    # ln(m / 2 kappa) shifts by -ln 2 in a metric-proportional way
    shift = -4.0 * math.log(2.0) / (128.0 * PI2)
    assert close(b - a, -shift * np.diag([-1.0, 1.0, 1.0, 1.0]), 1e-10)


def test_massless_families_do_not_see_kappa():
    # the plate and wedge configurations carry no renormalization scale at all
    assert "kappa" not in ParallelPlanes.__dataclass_fields__
    assert "kappa" not in AngularWedge.__dataclass_fields__


@pytest.mark.parametrize("signs", [(-1, -1), (-1, 1), (1, 1)])
def test_rectwedge_exchange_symmetry(signs):
    a1, a2 = signs
    s = stress_rectwedge_massive(RectWedgeMassive(a1, a2, 1.0), 0.1, 0.6, 1.3).total
    r = stress_rectwedge_massive(RectWedgeMassive(a2, a1, 1.0), 0.1, 1.3, 0.6).total
    assert s[1, 1] == pytest.approx(r[2, 2], rel=1e-12)
    assert s[1, 2] == pytest.approx(r[1, 2], rel=1e-12)
    assert s[0, 0] == pytest.approx(r[0, 0], rel=1e-12)


def test_massive_tensors_are_static_and_symmetric():
    t = stress_rectwedge_massive(RectWedgeMassive(1, -1, 0.7), 0.0, 0.4, 0.9).total
    assert t.is_symmetric()
    assert np.all(t.components[0, 1:] == 0.0)


def test_halfspace_pressure():
    cfg = HalfSpaceMassive(-1.0, 1.0)
    first, second = pressure_perpendicular(cfg, 0.0)
    t11 = stress_halfspace_massive(cfg, 0.0, 1.0).total[1, 1]
    assert first.vector == pytest.approx([-t11, 0.0, 0.0], rel=1e-10, abs=1e-15)
    assert second.vector == pytest.approx(first.vector, rel=1e-6, abs=1e-12)


@pytest.mark.parametrize("signs", [(-1, -1), (1, -1), (1, 1)])
@pytest.mark.parametrize("xi", [0.0, 0.25])
def test_rectwedge_pressure_prescriptions_agree(signs, xi):
    cfg = RectWedgeMassive(*signs, 1.0)
    first, second = pressure_perpendicular(cfg, xi, 0.8)
    scale = np.max(np.abs(stress_rectwedge_massive(cfg, xi, 0.08, 0.8).total.components))
    assert np.max(np.abs(first.vector - second.vector)) < 1e-6 * scale


def test_neumann_face_pressure_depends_on_xi():
    cfg = RectWedgeMassive(1.0, -1.0, 1.0)
    a = pressure_perpendicular(cfg, 0.0, 1.0)[0].vector[0]
    b = pressure_perpendicular(cfg, 0.25, 1.0)[0].vector[0]
    assert abs(a - b) > 1e-4 * abs(a)
    c = pressure_perpendicular(RectWedgeMassive(-1.0, -1.0, 1.0), 0.0, 1.0)[0].vector[0]
    d = pressure_perpendicular(RectWedgeMassive(-1.0, -1.0, 1.0), 0.25, 1.0)[0].vector[0]
    assert c == pytest.approx(d, rel=1e-12)


def test_corner_point_rejected():
    with pytest.raises(CornerPoint):
        pressure_perpendicular(RectWedgeMassive(-1, -1, 1.0), 0.0, 0.0)
    with pytest.raises(DomainViolation):
        pressure_perpendicular(RectWedgeMassive(-1, -1, 1.0), 0.0)


# ---------------------------------------------------------------------------
# wedges and the cosmic string


def test_dirichlet_half_plane_has_no_conformal_part():
    s = stress_wedge(AngularWedge("dd", PI), 0.0, WedgeGeometry(PI, 1.0, 1.0))
    assert np.max(np.abs(s.conformal.components)) < 1e-12
    assert np.max(np.abs(s.nonconformal.components)) > 1e-3


def test_string_at_full_angle_vanishes():
    s = stress_wedge(CosmicString(2 * PI), 0.3, WedgeGeometry(2 * PI, 1.0, 1.0))
    assert np.max(np.abs(s.conformal.components)) < 1e-10
    assert np.max(np.abs(s.nonconformal.components)) < 1e-10


def test_wedge_frame_and_structure():
    s = stress_wedge(AngularWedge("dd", PI / 3), 0.0, WedgeGeometry(PI / 3, 1.3, 0.4))
    assert s.frame == CYLINDRICAL
    assert s.total.is_symmetric()
    assert np.all(s.total.components[0, 1:] == 0.0)
    # the rho-theta entry lives only in the non-conformal part
    assert abs(s.conformal[1, 2]) < 1e-12
    assert abs(s.nonconformal[1, 2]) > 1e-3


@pytest.mark.parametrize("mode", ["dd", "dn", "nn"])
def test_pairwise_and_full_jets_agree(mode):
    g = WedgeGeometry(PI / 3, 1.0, 0.5)
    a = stress_wedge(AngularWedge(mode, PI / 3), 0.1, g, full_jet=True).total.components
    b = stress_wedge(AngularWedge(mode, PI / 3), 0.1, g, full_jet=False).total.components
    assert close(a, b, 1e-12)


@pytest.mark.parametrize("mode", ["dd", "dn", "nn", "periodic"])
def test_wedge_traceless(mode):
    cfg = CosmicString(PI / 2) if mode == "periodic" else AngularWedge(mode, 1.2)
    t = stress_wedge(cfg, 1.0 / 6.0, WedgeGeometry(cfg.alpha, 0.8, 0.5)).total
    assert abs(t.trace()) < 1e-10 * np.max(np.abs(t.components))


def test_wedge_rho_scaling():
    cfg = AngularWedge("dn", 2.0)
    t1 = stress_wedge(cfg, 0.1, WedgeGeometry(2.0, 1.0, 0.7)).total.components
    t2 = stress_wedge(cfg, 0.1, WedgeGeometry(2.0, 2.0, 0.7)).total.components
    # covariant theta components carry an extra rho per index
    scale = np.array([1.0, 1.0, 2.0, 1.0])
    assert close(t2 / np.outer(scale, scale), t1 / 16.0, 1e-10)


def test_dirichlet_wedge_pressure():
    alpha = PI / 3
    first, second = pressure_wedge(AngularWedge("dd", alpha), 0.0, 1.0)
    assert first.frame == CYLINDRICAL
    expect = -(PI ** 4 - alpha ** 4) / (480.0 * PI2 * alpha ** 4)
    assert first.vector[1] == pytest.approx(expect, rel=1e-8)
    assert first.vector[0] == pytest.approx(0.0, abs=1e-12)
    assert not second.finite
    assert second.divergence_exponent <= -2.0


def test_dn_wedge_pressure_at_conformal_coupling():
    alpha = 2.0
    first, _ = pressure_wedge(AngularWedge("dn", alpha), 1.0 / 6.0, 1.0, interior=False)
    expect = (7.0 * PI ** 4 + 8.0 * alpha ** 4) / (3840.0 * PI2 * alpha ** 4)
    assert first.vector[1] == pytest.approx(expect, rel=1e-8)


def test_wedge_pressure_scales_as_inverse_cube():
    cfg = AngularWedge("nn", 1.0)
    p1 = pressure_wedge(cfg, 0.2, 1.0, interior=False)[0].vector
    p2 = pressure_wedge(cfg, 0.2, 2.0, interior=False)[0].vector
    assert p2 == pytest.approx(p1 / 8.0, rel=1e-10, abs=1e-14)


def test_interior_limit_is_finite_at_conformal_coupling():
    # the divergence of the interior-limit prescription is purely non-conformal
    first, second = pressure_wedge(AngularWedge("dd", PI / 3), 1.0 / 6.0, 1.0)
    assert second.finite
    assert second.vector[1] == pytest.approx(first.vector[1], rel=1e-4)


def test_wedge_pressure_faces():
    cfg = AngularWedge("dd", PI / 3)
    a, _ = pressure_wedge(cfg, 0.0, 1.0, "pi_alpha", interior=False)
    b, _ = pressure_wedge(cfg, 0.0, 1.0, "pi0", interior=False)
    assert b.vector == pytest.approx(a.vector * np.array([1.0, -1.0, 1.0]))
    with pytest.raises(DomainViolation):
        pressure_wedge(AngularWedge("dn", 1.0), 0.0, 1.0, "pi0")
    with pytest.raises(DomainViolation):
        pressure_wedge(CosmicString(PI), 0.0, 1.0)
    with pytest.raises(DomainViolation):
        pressure_wedge(cfg, 0.0, 1.0, "side")
