"""Ball-lens beam transform: frozen references and an independent route."""
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wgmscatter import ParameterError, focal_length, focus_params, lens_transform, mode_area

from conftest import make_baseline

REL = 5e-15


def close(a, b, rel=REL):
    return math.isclose(a, b, rel_tol=rel, abs_tol=0.0)


def test_focal_length_landmarks():
    assert close(focal_length(2.0, 10e-6), 10e-6)  # focus lands on the back surface
    assert close(focal_length(1.7, 10e-6), 1.2142857142857143e-05)
    # approaches the weak-lens divergence as n -> 1+
    assert focal_length(1.001, 10e-6) > 100 * focal_length(1.7, 10e-6)


def test_frozen_transform_baseline(baseline):
    fb = focus_params(baseline)
    assert close(fb.F, 1.2142857142857143e-05)
    assert close(fb.z_R, 1.3666088820631137e-04)
    assert close(fb.w0_prime, 4.4252621290705734e-07)
    assert close(fb.s_prime, 1.2047739981860924e-05)
    assert close(fb.z_R_prime, 1.070489058092257e-06)
    assert close(fb.w_s, 9.5519994327239912e-07)
    assert close(fb.A_s, 1.4332054567428278e-12)


@pytest.mark.parametrize(
    "n,w_s,A_s",
    [
        (1.5, 1.7174730833929956e-06, 4.6333995898517151e-12),
        (1.9, 4.2001715846884217e-07, 2.7711111257534050e-13),
    ],
)
def test_frozen_spot_sizes_other_indices(n, w_s, A_s):
    fb = focus_params(make_baseline(n=n))
    assert close(fb.w_s, w_s)
    assert close(fb.A_s, A_s)


def _spot_via_complex_q(n, R, wavelength, w0, s):
    """Independent route: complex beam parameter through a thin lens of the
    same focal length, then free propagation to the grain plane z = R.

    Convention: q = (distance from waist) + i z_R with the in-medium
    Rayleigh range z_R = pi w0^2 n / lambda, matching the module.
    """
    lam_eff = wavelength / n
    F = n * R / (2.0 * (n - 1.0))
    q_in = complex(s, math.pi * w0**2 / lam_eff)  # at the lens
    q_out = q_in * F / (F - q_in)  # 1/q_out = 1/q_in - 1/F
    z_R_prime = q_out.imag
    w0_prime = math.sqrt(z_R_prime * lam_eff / math.pi)
    q_grain = q_out + R
    return w0_prime * math.sqrt(1.0 + (q_grain.real / z_R_prime) ** 2)


@given(
    n=st.floats(min_value=1.05, max_value=2.5),
    R=st.floats(min_value=2e-6, max_value=5e-5),
    w0=st.floats(min_value=5e-7, max_value=2e-5),
    s=st.floats(min_value=-5e-5, max_value=5e-5),
)
@settings(max_examples=200, deadline=None)
def test_transform_matches_complex_q_route(n, R, w0, s):
    fb = lens_transform(n, R, 977e-9, w0, s)
    w_q = _spot_via_complex_q(n, R, 977e-9, w0, s)
    assert math.isclose(fb.w_s, w_q, rel_tol=1e-10)


@given(w0=st.floats(min_value=2e-5, max_value=5e-4))
@settings(max_examples=60, deadline=None)
def test_wide_input_collimates_near_geometric_focus(w0):
    # large w0: geometric optics limit, new waist near F with strong minification
    fb = lens_transform(1.7, 10e-6, 977e-9, w0, 0.0)
    assert abs(fb.s_prime - fb.F) < 0.05 * fb.F
    assert fb.w0_prime < w0 * 1e-2


def test_spot_ratio_approaches_geometric_asymptote():
    # w_s/w0 -> |2 - n|/n for very wide input beams
    for n in (1.5, 1.7, 1.9):
        fb = lens_transform(n, 10e-6, 977e-9, 3e-4, 0.0)
        assert abs(fb.w_s / 3e-4 - abs(2.0 - n) / n) < 1e-3


def test_mode_area_definition():
    assert close(mode_area(2.0e-6), math.pi * (2.0e-6) ** 2 / 2.0)
    with pytest.raises(ParameterError):
        mode_area(0.0)


def test_transform_rejects_bad_inputs():
    with pytest.raises(ParameterError):
        lens_transform(1.0, 10e-6, 977e-9, 5e-6, 0.0)
    with pytest.raises(ParameterError):
        lens_transform(1.7, 10e-6, -977e-9, 5e-6, 0.0)
    with pytest.raises(ParameterError):
        lens_transform(1.7, 10e-6, 977e-9, 0.0, 0.0)
    with pytest.raises(ParameterError):
        focal_length(1.7, -1.0)
