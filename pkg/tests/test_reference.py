import math

import numpy as np
import pytest

from casimir_zeta.errors import UnknownKey
from casimir_zeta.reference import KEYS, reference_value
from casimir_zeta.tensors import CARTESIAN, StressTensor, frame_transform

PI = math.pi
PI2 = PI * PI


def test_dd_plate_coefficient():
    assert reference_value("TmnDD:A", {"a": 1.0, "x1": 0.3}) == pytest.approx(PI2 / 1440.0)


def test_dirichlet_wedge_coefficient():
    al = PI / 3
    got = reference_value("TDW:A", {"alpha": al, "rho": 1.0, "theta": 0.5})
    assert got == pytest.approx((PI ** 4 - al ** 4) / (1440.0 * PI2 * al ** 4))


def test_mixed_plate_coefficient():
    got = reference_value("TND:B", {"a": 1.0, "x1": 0.25})
    s = math.sin(PI / 4)
    assert got == pytest.approx(PI2 / 64.0 * (23 * math.cos(PI / 4) + math.cos(3 * PI / 4)) / s ** 4)


def test_unknown_keys():
    with pytest.raises(UnknownKey):
        reference_value("Tnope", {})
    with pytest.raises(UnknownKey):
        reference_value("TmnDD:Z", {"x1": 0.3})
    with pytest.raises(UnknownKey):
        reference_value("EnDN:A", {})


def test_every_key_evaluates():
    prm = {"a": 1.0, "x1": 0.4, "x2": 0.7, "alpha1": -1.0, "alpha2": 1.0, "m": 1.0,
           "alpha": 1.1, "rho": 0.9, "theta": 0.5, "xi": 0.2}
    for key in KEYS:
        val = reference_value(key, prm)
        arr = val.components if isinstance(val, StressTensor) else np.asarray(val)
        assert np.all(np.isfinite(arr)), key


def test_reference_tensors_are_traceless_at_conformal_coupling():
    prm = {"alpha": 1.1, "rho": 0.9, "theta": 0.5, "xi": 1.0 / 6.0}
    for key in ("TDW", "TDNW", "TDWNeu", "TPW"):
        assert abs(reference_value(key, prm).trace()) < 1e-12


def test_energies_and_plate_pressures():
    assert reference_value("EnNN") == reference_value("EnDDPP")
    assert reference_value("PDir") == pytest.approx(3.0 * PI2 / 1440.0)
    assert reference_value("PDN", {"plate": "pia"}) == pytest.approx(3.0 * 7.0 * PI2 / 11520.0)


# ---------------------------------------------------------------------------
# corrected forms versus the printed ones


def test_printed_halfspace_variant_differs_only_tangentially():
    prm = {"alpha1": -1.0, "m": 1.0, "x1": 1.0, "xi": 0.0}
    a = reference_value("T1pM", prm).components
    b = reference_value("T1pM_printed", prm).components
    diff = np.abs(a - b) > 1e-15
    assert diff[2, 2] and diff[3, 3]
    assert not diff[0, 0] and not diff[1, 1]


def test_corrected_halfspace_has_massless_limit():
    # at small mass the non-conformal part approaches the massless half-space
    prm = {"alpha1": -1.0, "m": 1e-3, "x1": 1.0}
    nc = reference_value("T1pM:nonconformal", prm).components
    ref = reference_value("TP3:nonconformal", prm).components
    assert np.max(np.abs(nc - ref)) < 1e-5


def _wedge_cartesian(key, al, rho, th, printed=False):
    prm = {"alpha": al, "rho": rho, "theta": th, "xi": 0.0, "printed": printed}
    return frame_transform(reference_value(key, prm), CARTESIAN).components


@pytest.mark.parametrize("printed,ok", [(False, True), (True, False)])
def test_dirichlet_wedge_quarter_space_limit(printed, ok):
    rho, th = 1.0, 0.6
    w = _wedge_cartesian("TDW", PI / 2, rho, th, printed)
    q = reference_value("T2P3", {"alpha1": -1.0, "alpha2": -1.0, "x1": rho * math.sin(th),
                                 "x2": rho * math.cos(th), "xi": 0.0}).components
    assert bool(np.max(np.abs(w - q)) < 1e-10 * np.max(np.abs(q))) is ok


@pytest.mark.parametrize("printed,ok", [(False, True), (True, False)])
def test_mixed_wedge_quarter_space_limit(printed, ok):
    # Dirichlet on theta = 0 (the plane x1 = 0), Neumann on theta = pi/2
    rho, th = 1.0, 0.6
    w = _wedge_cartesian("TDNW", PI / 2, rho, th, printed)
    q = reference_value("T2P3", {"alpha1": -1.0, "alpha2": 1.0, "x1": rho * math.sin(th),
                                 "x2": rho * math.cos(th), "xi": 0.0}).components
    assert bool(np.max(np.abs(w - q)) < 1e-10 * np.max(np.abs(q))) is ok


def test_string_vanishes_at_full_angle():
    t = reference_value("TPW", {"alpha": 2 * PI, "rho": 1.0, "theta": 1.0, "xi": 0.3})
    assert np.max(np.abs(t.components)) < 1e-15
