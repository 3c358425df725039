"""Tests for zero tables and node bunching statistics.

The key claims: order-0 spacings sit below pi and grow toward it, while
order-1 spacings sit above pi and shrink toward it. Expressed through
the local density g = pi / spacing, order 0 stays above one (bunching)
and order 1 below one (anti-bunching), for the regular and the singular
oscillatory family alike.
"""

import math

import numpy as np
import pytest

import oracles
from anticentrifugal.nodes import (
    BracketingError,
    ZeroTable,
    bunching_verdict,
    find_zeros,
    node_density,
    refine_zero,
)
from anticentrifugal.specfun import CylinderFamily, besselj, bessely

J = CylinderFamily.BESSEL_J
Y = CylinderFamily.NEUMANN_Y


@pytest.fixture(scope="module")
def tables():
    return {
        (J, 0): find_zeros(J, 0, 21),
        (J, 1): find_zeros(J, 1, 21),
        (Y, 0): find_zeros(Y, 0, 21),
        (Y, 1): find_zeros(Y, 1, 21),
    }


# ---------------------------------------------------------------------------
# the zeros themselves

@pytest.mark.parametrize("family, order, frozen", [
    (J, 0, oracles.J0_ZEROS_1_TO_3),
    (J, 1, oracles.J1_ZEROS_1_TO_3),
    (Y, 0, oracles.Y0_ZEROS_1_TO_3),
    (Y, 1, oracles.Y1_ZEROS_1_TO_3),
])
def test_first_three_zeros_frozen(tables, family, order, frozen):
    got = tables[(family, order)].zeros[:3]
    assert got == pytest.approx(frozen, abs=5e-12)


def test_deep_zeros_frozen():
    table = find_zeros(J, 0, 51)
    assert table.zeros[49] == pytest.approx(oracles.J0_ZERO_50, abs=2e-11)
    assert table.zeros[50] == pytest.approx(oracles.J0_ZERO_51, abs=2e-11)
    spacing = table.zeros[50] - table.zeros[49]
    assert spacing == pytest.approx(oracles.J0_ZERO_51 - oracles.J0_ZERO_50, abs=2e-11)


def test_singular_family_nodes_start_earlier(tables):
    # the order-0 singular solution already crosses zero before x = 1,
    # well inside the first zero of the regular one
    assert tables[(Y, 0)].zeros[0] < 1.0 < tables[(J, 0)].zeros[0]


def test_zeros_really_are_zeros(tables):
    fns = {J: besselj, Y: bessely}
    for (family, order), table in tables.items():
        worst = max(abs(fns[family](order, z)) for z in table.zeros)
        assert worst <= 1e-11


def test_orders_interlace(tables):
    for family in (J, Y):
        z0 = tables[(family, 0)].zeros
        z1 = tables[(family, 1)].zeros
        for n in range(20):
            assert z0[n] < z1[n] < z0[n + 1]


# ---------------------------------------------------------------------------
# root refinement

def test_bisect_and_secant_agree(tables):
    z = tables[(J, 0)].zeros
    f = lambda x: besselj(0, x)
    for zn in z[:20]:
        a = refine_zero(f, zn - 0.3, zn + 0.3, method="bisect")
        b = refine_zero(f, zn - 0.3, zn + 0.3, method="secant")
        assert abs(a - b) <= 1e-10


def test_refine_zero_exact_endpoint():
    f = lambda x: x - 2.0
    assert refine_zero(f, 2.0, 3.0) == 2.0
    assert refine_zero(f, 1.0, 2.0) == 2.0


def test_refine_zero_error_paths():
    f = lambda x: x * x + 1.0  # no real zeros
    with pytest.raises(BracketingError):
        refine_zero(f, 0.0, 1.0)
    with pytest.raises(ValueError):
        refine_zero(f, 1.0, 0.0)
    with pytest.raises(ValueError):
        refine_zero(lambda x: x, -1.0, 1.0, method="brent")


# ---------------------------------------------------------------------------
# table integrity

def test_table_rejects_corrupt_data():
    with pytest.raises(ValueError):
        ZeroTable(J, 0, np.array([]))
    with pytest.raises(ValueError):
        ZeroTable(J, 0, np.array([1.0, -2.0]))
    with pytest.raises(ValueError):
        ZeroTable(J, 0, np.array([3.0, 2.5]))
    with pytest.raises(ValueError):
        ZeroTable(J, 0, np.array([1.0, 10.0]))  # spacing above 2 pi
    with pytest.raises(ValueError):
        ZeroTable(J, 0, np.array([1.0, 2.0]))  # spacing below 2


def test_spacing_screen_applies_to_low_orders_only():
    # higher orders may legitimately have a wide first gap
    ZeroTable(J, 5, np.array([1.0, 10.0]))


def test_find_zeros_validation():
    with pytest.raises(ValueError):
        find_zeros(J, 2, 5)
    with pytest.raises(ValueError):
        find_zeros(J, 0, 0)
    with pytest.raises(ValueError):
        find_zeros(J, 0, 5, scan_step=0.7)
    with pytest.raises(ValueError):
        find_zeros(CylinderFamily.MODIFIED_K, 0, 5)


# ---------------------------------------------------------------------------
# densities and the bunching verdict

def test_first_densities_frozen(tables):
    cases = [
        ((J, 0), oracles.G_J0_FIRST),
        ((J, 1), oracles.G_J1_FIRST),
        ((Y, 0), oracles.G_Y0_FIRST),
        ((Y, 1), oracles.G_Y1_FIRST),
    ]
    for key, frozen in cases:
        report = node_density(tables[key])
        assert report.densities[0] == pytest.approx(frozen, rel=1e-11)


def test_density_report_shapes(tables):
    report = node_density(tables[(J, 0)])
    assert report.spacings.shape == (20,)
    assert report.densities.shape == (20,)
    assert np.all(report.densities * report.spacings == pytest.approx(math.pi))


def test_density_needs_two_zeros():
    with pytest.raises(ValueError):
        node_density(ZeroTable(J, 0, np.array([2.404825557695773])))


@pytest.mark.parametrize("family", [J, Y])
def test_bunching_verdict_passes(tables, family):
    verdict = bunching_verdict(
        node_density(tables[(family, 0)]), node_density(tables[(family, 1)])
    )
    assert verdict.passed
    assert verdict.max_violation == 0.0
    assert verdict.count == 20


@pytest.mark.parametrize("family", [J, Y])
def test_densities_bracket_one_from_both_sides(tables, family):
    g0 = node_density(tables[(family, 0)]).densities
    g1 = node_density(tables[(family, 1)]).densities
    assert np.all(g0 > 1.0)
    assert np.all(g1 < 1.0)
    assert np.all(np.diff(g0) < 0.0)
    assert np.all(np.diff(g1) > 0.0)


def test_singular_family_bunches_harder(tables):
    g_j = node_density(tables[(J, 0)]).densities[0]
    g_y = node_density(tables[(Y, 0)]).densities[0]
    assert g_y > g_j > 1.0
    assert g_y == pytest.approx(oracles.G_Y0_FIRST, rel=1e-11)


def test_verdict_input_validation(tables):
    r_j0 = node_density(tables[(J, 0)])
    r_j1 = node_density(tables[(J, 1)])
    r_y1 = node_density(tables[(Y, 1)])
    with pytest.raises(ValueError):
        bunching_verdict(r_j0, r_y1)  # family mismatch
    with pytest.raises(ValueError):
        bunching_verdict(r_j1, r_j0)  # orders swapped
