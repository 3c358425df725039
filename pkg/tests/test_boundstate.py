"""Tests for delta-well bound states and their probability densities.

The striking geometry claim is the planar one: the radial weight
W(r) = 2 k^2 r K_0(k r)^2 vanishes at the origin and peaks on a ring,
while the line and spatial weights peak at the origin. The planar
coupling relation is checked along two routes, the closed form and an
adaptive quadrature of the momentum integral it came from.
"""

import math
import warnings

import numpy as np
import pytest

import oracles
from anticentrifugal.boundstate import (
    DeltaBoundState,
    DeltaCoupling2D,
    DensityForm,
    ProbabilityDensity,
    coupling_from_k,
    coupling_residual,
    cutoff_integral,
    density,
    density_maximum,
    density_profile,
    k_from_coupling,
    normalize_check,
    one_three_d_bound_energy,
    phi_line,
    phi_point,
    ring_peak_parameter,
)
from anticentrifugal.radial import RadialGrid


# ---------------------------------------------------------------------------
# density profiles

def test_line_density_peaks_at_origin():
    assert density_profile(1, 1.0, 0.0) == 1.0
    assert density_profile(1, 2.0, 0.0) == 2.0
    # symmetric in x
    assert density_profile(1, 1.5, -0.7) == density_profile(1, 1.5, 0.7)


def test_spatial_density_peaks_at_origin():
    assert density_profile(3, 1.0, 0.0) == 2.0
    assert density_profile(3, 2.0, 0.0) == 4.0


def test_ring_density_vanishes_at_origin():
    assert density_profile(2, 1.0, 0.0) == 0.0
    assert density_profile(2, 1.0, 1.0) == pytest.approx(oracles.W2_AT_K1_R1, rel=1e-13)


def test_density_profile_validation():
    with pytest.raises(ValueError):
        density_profile(4, 1.0, 1.0)
    with pytest.raises(ValueError):
        density_profile(2, 0.0, 1.0)
    with pytest.raises(ValueError):
        density_profile(2, 1.0, -1.0)
    with pytest.raises(ValueError):
        density_profile(3, 1.0, -0.5)


def test_density_sampling_accepts_grid_and_array():
    grid = RadialGrid(0.1, 5.0, 50)
    pd = density(2, 1.0, grid)
    assert isinstance(pd, ProbabilityDensity)
    assert pd.form is DensityForm.RING
    assert pd.weights.shape == (50,)
    pd2 = density(2, 1.0, grid.points)
    assert np.array_equal(pd.weights, pd2.weights)
    assert pd.energy == -0.5


def test_form_for_dimension():
    assert DensityForm.for_dimension(1) is DensityForm.EXP_LINE
    assert DensityForm.for_dimension(2) is DensityForm.RING
    assert DensityForm.for_dimension(3) is DensityForm.EXP_RADIAL
    with pytest.raises(ValueError):
        DensityForm.for_dimension(0)


# ---------------------------------------------------------------------------
# normalization

@pytest.mark.parametrize("dimension", [1, 2, 3])
@pytest.mark.parametrize("k", [0.5, 1.0, 2.0, 7.0])
def test_total_probability_is_one(dimension, k):
    pd = density(dimension, k, np.array([1.0]))
    assert normalize_check(pd) == pytest.approx(1.0, abs=1e-8)


def test_ring_tail_warning_when_tolerance_is_absurd():
    pd = density(2, 1.0, np.array([1.0]))
    with pytest.warns(RuntimeWarning):
        normalize_check(pd, rel_tol=1e-34)


# ---------------------------------------------------------------------------
# the ring maximum

def test_ring_peak_parameter_value():
    xi = ring_peak_parameter()
    assert xi == pytest.approx(oracles.RING_XI, abs=2e-13)
    assert 0.1 < xi < 0.3


def test_ring_peak_is_a_local_maximum():
    xi = ring_peak_parameter()
    w = lambda r: density_profile(2, 1.0, r)
    assert w(xi) > w(xi - 1e-4)
    assert w(xi) > w(xi + 1e-4)


def test_density_maximum_by_dimension():
    loc, val = density_maximum(density(1, 3.0, np.array([1.0])))
    assert (loc, val) == (0.0, 3.0)
    loc, val = density_maximum(density(3, 2.0, np.array([1.0])))
    assert (loc, val) == (0.0, 4.0)
    loc, val = density_maximum(density(2, 1.0, np.array([1.0])))
    assert loc == pytest.approx(oracles.RING_XI, abs=2e-13)
    assert val == pytest.approx(oracles.RING_W_MAX_K1, rel=1e-12)


def test_ring_maximum_scales_inversely_with_k():
    loc1, val1 = density_maximum(density(2, 1.0, np.array([1.0])))
    loc5, val5 = density_maximum(density(2, 5.0, np.array([1.0])))
    assert loc5 == pytest.approx(loc1 / 5.0, rel=1e-12)
    assert val5 == pytest.approx(5.0 * val1, rel=1e-12)


def test_ring_density_diverges_less_than_the_amplitude():
    """The amplitude K_0 diverges logarithmically at the axis while the
    weight r K_0^2 still goes to zero: probability leaves the origin."""
    radii = np.array([1e-2, 1e-4, 1e-8])
    amp = np.array([math.sqrt(w / (2.0 * r)) for r, w in
                    zip(radii, density_profile(2, 1.0, radii))])
    assert np.all(np.diff(amp) > 0.0)  # amplitude grows toward the axis
    w = density_profile(2, 1.0, radii)
    assert np.all(np.diff(w) < 0.0)  # weight still dies off


# ---------------------------------------------------------------------------
# the planar coupling relation, two routes

def test_cutoff_integral_matches_closed_form():
    for k in (1e-6, 0.01, 0.3, 1.0, 5.0):
        for cutoff in (1.0, 10.0):
            got = cutoff_integral(k, cutoff)
            want = 0.5 * math.log1p((cutoff / k) ** 2)
            assert got == pytest.approx(want, rel=1e-12)


def test_wavenumber_from_coupling_frozen():
    k = k_from_coupling(4.0 * math.pi, 1.0)
    assert k == pytest.approx(oracles.K_AT_U0_4PI, rel=1e-14)
    assert k_from_coupling(8.0 * math.pi, 1.0) == pytest.approx(oracles.K_AT_U0_8PI, rel=1e-14)


def test_binding_deepens_with_coupling():
    ks = [k_from_coupling(u, 1.0) for u in (2.0, 4.0, 8.0, 20.0)]
    assert all(a < b for a, b in zip(ks, ks[1:]))


def test_coupling_round_trip():
    for u0 in (0.5, 4.0, 12.0, 60.0):
        k = k_from_coupling(u0, 1.0)
        assert coupling_from_k(k, 1.0) == pytest.approx(u0, rel=1e-12)


def test_coupling_residual_closes_the_loop():
    for u0 in (1.0, 4.0 * math.pi, 40.0):
        k = k_from_coupling(u0, 1.0)
        assert coupling_residual(u0, 1.0, k) <= 1e-10


def test_weak_coupling_asymptotic_branch():
    # 4 pi / U0 = 800 overflows expm1's argument range, switching to the
    # asymptotic form k = L exp(-2 pi / U0); the log must come out exact
    u0 = 4.0 * math.pi / 800.0
    k = k_from_coupling(u0, 1.0)
    assert math.log(k) == pytest.approx(-400.0, rel=1e-13)
    assert coupling_from_k(k, 1.0) == pytest.approx(u0, rel=1e-12)


def test_extreme_weak_coupling_warns_of_underflow():
    u0 = 4.0 * math.pi / 1390.0
    with pytest.warns(RuntimeWarning):
        k_from_coupling(u0, 1.0)


def test_deep_wavenumber_inversion_stays_finite():
    # far below the cutoff the ratio squared overflows a double, so the
    # inversion must go through log space; far above it saturates
    assert coupling_from_k(1e-200, 1.0) == pytest.approx(
        4.0 * math.pi / (2.0 * 200.0 * math.log(10.0)), rel=1e-13)
    with pytest.raises(OverflowError):
        coupling_from_k(1e200, 1.0)


def test_coupling_sign_validation():
    with pytest.raises(ValueError):
        k_from_coupling(0.0, 1.0)
    with pytest.raises(ValueError) as excinfo:
        k_from_coupling(-1.0, 1.0)
    # the error must point at the renormalized parametrization instead
    assert "coupling_from_k" in str(excinfo.value)


def test_delta_coupling_record_round_trip():
    well = DeltaCoupling2D.from_coupling(4.0 * math.pi, 1.0)
    assert well.wavenumber == pytest.approx(oracles.K_AT_U0_4PI, rel=1e-14)
    assert well.energy == pytest.approx(oracles.E_AT_U0_4PI, rel=1e-14)
    back = DeltaCoupling2D.from_wavenumber(well.wavenumber, 1.0)
    assert back.coupling == pytest.approx(4.0 * math.pi, rel=1e-12)


# ---------------------------------------------------------------------------
# closed forms in one and three dimensions

def test_line_bound_state():
    state = one_three_d_bound_energy(1, coupling=-2.0)
    assert isinstance(state, DeltaBoundState)
    assert state.wavenumber == 1.0
    assert state.energy == -0.5


def test_spatial_bound_state():
    state = one_three_d_bound_energy(3, inverse_scattering_length=1.0)
    assert state.wavenumber == 1.0
    assert state.energy == -0.5


def test_bound_state_validation():
    with pytest.raises(ValueError):
        one_three_d_bound_energy(1, coupling=1.0)  # repulsive line delta
    with pytest.raises(ValueError):
        one_three_d_bound_energy(1)
    with pytest.raises(ValueError):
        one_three_d_bound_energy(3, inverse_scattering_length=-1.0)
    with pytest.raises(ValueError):
        one_three_d_bound_energy(3)
    with pytest.raises(ValueError):
        one_three_d_bound_energy(2, coupling=-1.0)
    with pytest.raises(ValueError):
        one_three_d_bound_energy(5, coupling=-1.0)


# ---------------------------------------------------------------------------
# amplitudes versus weights

def test_line_amplitude_squares_to_the_weight():
    k = 1.3
    for x in (-2.0, 0.0, 0.4, 3.0):
        assert phi_line(k, x) ** 2 == pytest.approx(density_profile(1, k, abs(x)), rel=1e-15)


def test_line_amplitude_slope_jump_matches_coupling():
    """The bound amplitude must satisfy the contact matching condition:
    the kink at the origin equals the coupling times the amplitude."""
    k, h = 1.0, 1e-7
    coupling = -2.0 * k
    jump = (phi_line(k, h) - phi_line(k, 0.0)) / h - (phi_line(k, 0.0) - phi_line(k, -h)) / h
    assert jump == pytest.approx(coupling * phi_line(k, 0.0), rel=1e-5)


def test_spatial_amplitude_squares_to_the_weight():
    k = 0.8
    for r in (0.2, 1.0, 4.0):
        got = 4.0 * math.pi * r**2 * phi_point(k, r) ** 2
        assert got == pytest.approx(density_profile(3, k, r), rel=1e-14)


def test_point_amplitude_rejects_the_origin():
    with pytest.raises(ValueError):
        phi_point(1.0, 0.0)
