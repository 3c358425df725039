"""Cross-checking suites that pit independent computational routes against
each other: identities against direct evaluation, quadrature against series,
numeric integration against closed forms.

``run_all`` is what the command line's ``verify`` subcommand serializes.
Every check is deterministic (the one random sample set is drawn from a
fixed seed), so repeated runs produce identical reports. ``tolerance_scale``
multiplies every tolerance; zero is the supported way to exercise the
failure path end to end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .boundstate import (
    coupling_from_k,
    cutoff_integral,
    density,
    density_maximum,
    density_profile,
    k_from_coupling,
    normalize_check,
    ring_peak_parameter,
)
from .nodes import ZeroTable, bunching_verdict, find_zeros, node_density
from .potentials import (
    EffectivePotentialSpec,
    PotentialFamily,
    SignClass,
    classify_potential,
)
from .radial import (
    Direction,
    RadialGrid,
    SolutionFamily,
    analytic_radial,
    integrate_radial,
    laplacian_reduction_check,
    ode_residual,
)
from .specfun import (
    SERIES_SWITCH_I,
    SERIES_SWITCH_JY,
    SERIES_SWITCH_K,
    CylinderFamily,
    CylinderKind,
    _i_series,
    _i_table,
    _j_series,
    _j_table,
    _k01_large,
    _k01_series,
    _y01_large,
    _y01_series,
    besselj,
    besselk,
    eval_cylinder,
    eval_cylinder_derivative,
    sommerfeld_j0,
)

_RNG_SEED = 20240815
_SQRT_HALF_PI = math.sqrt(0.5 * math.pi)


@dataclass(frozen=True)
class SuiteResult:
    """One named check: observed worst error against its scaled tolerance."""

    name: str
    passed: bool
    max_error: float
    tolerance: float
    detail: str = ""


def _res(name: str, err: float, tol: float, scale: float, detail: str = "") -> SuiteResult:
    tol_eff = tol * scale
    return SuiteResult(name, bool(err <= tol_eff), float(err), float(tol_eff), detail)


def suite_wronskians(scale: float = 1.0) -> list[SuiteResult]:
    """Wronskian identities of the two solution pairs on a dense grid.

    J_m Y_m' - J_m' Y_m must equal 2/(pi x) and I_m K_m' - I_m' K_m must
    equal -1/x; each mixes all four evaluation regimes across [0.1, 50].
    """
    xs = np.linspace(0.1, 50.0, 1000)
    worst_osc = 0.0
    worst_mod = 0.0
    for m in (0, 1):
        kj = CylinderKind(CylinderFamily.BESSEL_J, m)
        ky = CylinderKind(CylinderFamily.NEUMANN_Y, m)
        ki = CylinderKind(CylinderFamily.MODIFIED_I, m)
        kk = CylinderKind(CylinderFamily.MODIFIED_K, m)
        for x in xs:
            x = float(x)
            w = eval_cylinder(kj, x) * eval_cylinder_derivative(ky, x) - eval_cylinder_derivative(
                kj, x
            ) * eval_cylinder(ky, x)
            worst_osc = max(worst_osc, abs(w - 2.0 / (math.pi * x)))
            w = eval_cylinder(ki, x) * eval_cylinder_derivative(kk, x) - eval_cylinder_derivative(
                ki, x
            ) * eval_cylinder(kk, x)
            worst_mod = max(worst_mod, abs(w + 1.0 / x))
    detail = "orders 0 and 1 on 1000 points of [0.1, 50]"
    return [
        _res("wronskian-oscillatory", worst_osc, 1e-10, scale, detail),
        _res("wronskian-modified", worst_mod, 1e-10, scale, detail),
    ]


def suite_sommerfeld(scale: float = 1.0) -> list[SuiteResult]:
    """Angular plane-wave quadrature against the series evaluation of J_0."""
    rng = np.random.default_rng(_RNG_SEED)
    args = np.concatenate(([0.0, 20.0], rng.uniform(0.0, 20.0, 100)))
    worst = 0.0
    for kr in args:
        kr = float(kr)
        worst = max(worst, abs(sommerfeld_j0(kr) - besselj(0, kr)))
    return [
        _res(
            "sommerfeld-interference",
            worst,
            1e-10,
            scale,
            "256-point angular quadrature, 100 seeded arguments plus endpoints",
        )
    ]


def suite_special_limits(scale: float = 1.0) -> list[SuiteResult]:
    """Limiting behavior of K_0 and continuity across method switches."""
    out = []
    # logarithmic divergence toward the origin
    err = abs(besselk(0, 1e-8) / (-math.log(1e-8)) - 1.0)
    out.append(
        _res("k0-log-divergence", err, 1e-2, scale, "K_0(x)/(-ln x) at x = 1e-8")
    )
    # exponential decay: the product K_0(x) e^x sqrt(x) approaches
    # sqrt(pi/2) like 1 - 1/(8x), so at x = 50 the raw product still sits
    # 2.5e-3 away; test the first-order-corrected ratio tightly and the
    # raw deviation loosely, plus its decrease with x
    def decay_product(x: float) -> float:
        return besselk(0, x) * math.exp(x) * math.sqrt(x)

    def corrected(x: float) -> float:
        return _SQRT_HALF_PI * (1.0 - 1.0 / (8.0 * x) + 9.0 / (128.0 * x * x))

    err = max(abs(decay_product(x) / corrected(x) - 1.0) for x in (50.0, 100.0, 200.0))
    out.append(
        _res(
            "k0-exponential-decay",
            err,
            1e-5,
            scale,
            "K_0(x) e^x sqrt(x) against sqrt(pi/2)(1 - 1/(8x) + 9/(128x^2))",
        )
    )
    dev50 = abs(decay_product(50.0) - _SQRT_HALF_PI)
    dev200 = abs(decay_product(200.0) - _SQRT_HALF_PI)
    out.append(
        _res(
            "k0-decay-trend",
            max(dev50 / 5e-3, dev200 / dev50 / 0.5),
            1.0,
            scale,
            "raw deviation below 5e-3 at x=50 and shrinking by x=200",
        )
    )
    # both evaluation routes agree at the switch points
    worst = 0.0
    for x in (SERIES_SWITCH_JY - 1e-6, SERIES_SWITCH_JY + 1e-6):
        t = _j_table(x)
        y_small = _y01_series(x)
        y_large = _y01_large(x)
        for m in (0, 1):
            worst = max(worst, abs(_j_series(m, x) - t[m]) / abs(t[m]))
            worst = max(worst, abs(y_small[m] - y_large[m]) / abs(y_large[m]))
    for x in (SERIES_SWITCH_I - 1e-6, SERIES_SWITCH_I + 1e-6):
        t = _i_table(x)
        for m in (0, 1):
            worst = max(worst, abs(_i_series(m, x) - t[m]) / abs(t[m]))
    for x in (SERIES_SWITCH_K - 1e-6, SERIES_SWITCH_K + 1e-6):
        k_small = _k01_series(x)
        k_large = _k01_large(x)
        for m in (0, 1):
            worst = max(worst, abs(k_small[m] - k_large[m]) / abs(k_large[m]))
    out.append(
        _res(
            "crossover-continuity",
            worst,
            1e-10,
            scale,
            "series vs large-argument routes 1e-6 on either side of each switch",
        )
    )
    return out


_QUANTUM_ANTI = EffectivePotentialSpec(PotentialFamily.QUANTUM_ANTICENTRIFUGAL)


def _match_grid(h: float) -> RadialGrid:
    n = round(20.0 / h) + 1
    return RadialGrid(0.05, 20.05, n)


def suite_radial(scale: float = 1.0) -> list[SuiteResult]:
    """Numerov integration against the closed-form radial solutions."""
    out = []
    grid = _match_grid(1e-3)
    # decaying branch, marched inward: pointwise relative error is fair
    # because the solution never vanishes
    ana_k = analytic_radial(SolutionFamily.DECAYING_MODIFIED, 0, 1.0, grid)
    num_k = integrate_radial(
        _QUANTUM_ANTI,
        -0.5,
        grid,
        (float(ana_k.values[-1]), float(ana_k.values[-2])),
        Direction.INWARD,
    )
    err = float(np.max(np.abs(num_k.values - ana_k.values) / np.abs(ana_k.values)))
    out.append(
        _res("radial-match-decaying", err, 1e-6, scale, "inward Numerov vs closed form, h = 1e-3")
    )
    # oscillatory branch, marched outward: relative to the global amplitude
    # because the solution has zeros
    ana_j = analytic_radial(SolutionFamily.OSCILLATORY_REGULAR, 0, 1.0, grid)
    num_j = integrate_radial(
        _QUANTUM_ANTI,
        0.5,
        grid,
        (float(ana_j.values[0]), float(ana_j.values[1])),
        Direction.OUTWARD,
    )
    err = float(
        np.max(np.abs(num_j.values - ana_j.values)) / np.max(np.abs(ana_j.values))
    )
    out.append(
        _res("radial-match-oscillatory", err, 1e-6, scale, "outward Numerov vs closed form, h = 1e-3")
    )
    # closed-form solutions must satisfy the equation under finite differences
    res_grid = RadialGrid(0.5, 10.0, 9501)
    r1 = ode_residual(
        analytic_radial(SolutionFamily.DECAYING_MODIFIED, 0, 1.0, res_grid),
        _QUANTUM_ANTI,
        -0.5,
    )
    spec_m1 = EffectivePotentialSpec(PotentialFamily.PLANAR_WAVE, angular_momentum=1)
    r2 = ode_residual(
        analytic_radial(SolutionFamily.OSCILLATORY_REGULAR, 1, 1.0, res_grid),
        spec_m1,
        0.5,
    )
    out.append(
        _res("radial-residual", max(r1, r2), 1e-5, scale, "five-point defect of closed forms")
    )
    # fourth-order convergence, observed from three spacings
    errs = []
    for h in (4e-3, 2e-3, 1e-3):
        g = _match_grid(h)
        ana = analytic_radial(SolutionFamily.DECAYING_MODIFIED, 0, 1.0, g)
        num = integrate_radial(
            _QUANTUM_ANTI,
            -0.5,
            g,
            (float(ana.values[-1]), float(ana.values[-2])),
            Direction.INWARD,
        )
        errs.append(float(np.max(np.abs(num.values - ana.values))))
    orders = [math.log2(errs[i] / errs[i + 1]) for i in range(2)]
    out.append(
        _res(
            "radial-convergence-order",
            max(abs(o - 4.0) for o in orders),
            0.2,
            scale,
            f"orders {orders[0]:.3f}, {orders[1]:.3f} from h = 4e-3, 2e-3, 1e-3",
        )
    )
    # branch selection: decaying seeds stay bounded inward, generic seeds
    # at the same negative energy blow up outward
    k_big = 30.0
    ana = analytic_radial(SolutionFamily.DECAYING_MODIFIED, 0, k_big, grid)
    num = integrate_radial(
        _QUANTUM_ANTI,
        -0.5 * k_big * k_big,
        grid,
        (float(ana.values[-1]), float(ana.values[-2])),
        Direction.INWARD,
    )
    bounded = float(np.max(np.abs(num.values))) < 10.0
    try:
        integrate_radial(
            _QUANTUM_ANTI, -0.5 * k_big * k_big, grid, (1e-6, 1.1e-6), Direction.OUTWARD
        )
        overflowed = False
    except OverflowError:
        overflowed = True
    out.append(
        _res(
            "radial-branch-selection",
            0.0 if (bounded and overflowed) else 1.0,
            0.0,
            scale,
            "inward decaying run bounded; outward generic run overflows",
        )
    )
    # constancy of the Wronskian of two independent numeric solutions
    wgrid = RadialGrid(0.5, 20.5, 20001)
    waves = []
    for fam in (SolutionFamily.OSCILLATORY_REGULAR, SolutionFamily.OSCILLATORY_SINGULAR):
        ana = analytic_radial(fam, 0, 1.0, wgrid)
        waves.append(
            integrate_radial(
                _QUANTUM_ANTI,
                0.5,
                wgrid,
                (float(ana.values[0]), float(ana.values[1])),
                Direction.OUTWARD,
            ).values
        )
    h = wgrid.spacing
    u1, u2 = waves
    d1 = (u1[:-4] - 8.0 * u1[1:-3] + 8.0 * u1[3:-1] - u1[4:]) / (12.0 * h)
    d2 = (u2[:-4] - 8.0 * u2[1:-3] + 8.0 * u2[3:-1] - u2[4:]) / (12.0 * h)
    w = u1[2:-2] * d2 - d1 * u2[2:-2]
    mid = float(np.median(w))
    drift = float((np.max(w) - np.min(w)) / abs(mid))
    out.append(
        _res(
            "radial-wronskian-constancy",
            drift,
            1e-8,
            scale,
            "numeric solution pair on [0.5, 20.5]",
        )
    )
    # the polar equation and its half-power reduction agree
    lap_grid = RadialGrid(0.5, 10.0, 2001)
    lap = max(
        laplacian_reduction_check(m, k, lap_grid) for m in (0, 1) for k in (1.0, 2.0)
    )
    out.append(
        _res("laplacian-reduction", lap, 1e-5, scale, "orders 0, 1 at k = 1, 2")
    )
    return out


def suite_normalization(scale: float = 1.0) -> list[SuiteResult]:
    """Unit total probability for every dimension and several wavenumbers."""
    worst = 0.0
    for dim in (1, 2, 3):
        for k in (0.5, 1.0, 2.0, 7.0):
            pd = density(dim, k, np.linspace(0.05 / k, 20.0 / k, 32))
            worst = max(worst, abs(normalize_check(pd) - 1.0))
    return [
        _res(
            "density-normalization",
            worst,
            1e-8,
            scale,
            "dimensions 1-3, k in {0.5, 1, 2, 7}",
        )
    ]


def suite_nodes(scale: float = 1.0) -> list[SuiteResult]:
    """Node bunching/anti-bunching statistics and the large-index spacing."""
    out = []
    tables = {
        (fam, m): find_zeros(fam, m, 51)
        for fam in (CylinderFamily.BESSEL_J, CylinderFamily.NEUMANN_Y)
        for m in (0, 1)
    }
    worst_violation = 0.0
    first_densities = {}
    for fam in (CylinderFamily.BESSEL_J, CylinderFamily.NEUMANN_Y):
        reports = {
            m: node_density(
                ZeroTable(fam, m, tables[(fam, m)].zeros[:21])
            )
            for m in (0, 1)
        }
        verdict = bunching_verdict(reports[0], reports[1])
        worst_violation = max(worst_violation, verdict.max_violation)
        first_densities[fam] = float(reports[0].densities[0])
    out.append(
        _res(
            "node-bunching",
            worst_violation,
            0.0,
            scale,
            "orders 0/1 of both oscillatory families, 20 intervals",
        )
    )
    excess = first_densities[CylinderFamily.NEUMANN_Y] - first_densities[
        CylinderFamily.BESSEL_J
    ]
    out.append(
        _res(
            "neumann-bunching-excess",
            max(0.0, -excess),
            0.0,
            scale,
            "first-interval bunching stronger for the singular family",
        )
    )
    worst_gap = 0.0
    for table in tables.values():
        worst_gap = max(
            worst_gap, abs(float(table.zeros[50] - table.zeros[49]) - math.pi)
        )
    out.append(
        _res("spacing-approaches-pi", worst_gap, 1e-3, scale, "spacing of zeros 50-51")
    )
    return out


def suite_dimensions(scale: float = 1.0) -> list[SuiteResult]:
    """Sign pattern of the zero-angular-momentum potential across dimensions."""
    expected = {1: SignClass.VANISHING, 2: SignClass.ATTRACTIVE, 3: SignClass.VANISHING}
    mismatches = 0
    for n in range(1, 21):
        want = expected.get(n, SignClass.REPULSIVE)
        spec = EffectivePotentialSpec(PotentialFamily.ZERO_MOMENTUM_NDIM, n_dim=n)
        if classify_potential(spec) is not want:
            mismatches += 1
    return [
        _res(
            "dimension-sweep",
            float(mismatches),
            0.0,
            scale,
            "vanishing/attractive/vanishing/repulsive... for N = 1..20",
        )
    ]


def _quadrature_root(coupling: float, cutoff: float, guess: float) -> float:
    """Wavenumber root of the cutoff condition with the integral done by
    quadrature; secant iteration in log space."""
    target = 2.0 * math.pi / coupling

    def g(t: float) -> float:
        return cutoff_integral(math.exp(t), cutoff) - target

    t0 = math.log(guess) + 0.2
    t1 = math.log(guess) - 0.2
    g0 = g(t0)
    g1 = g(t1)
    for _ in range(80):
        if g1 == g0:
            break
        t2 = t1 - g1 * (t1 - t0) / (g1 - g0)
        t0, g0 = t1, g1
        t1, g1 = t2, g(t2)
        if abs(t1 - t0) < 1e-14 * max(1.0, abs(t1)):
            break
    return math.exp(t1)


def suite_delta_coupling(scale: float = 1.0) -> list[SuiteResult]:
    """Closed-form planar wavenumber against the quadrature-evaluated
    condition, plus the coupling round trip."""
    cutoff = 1.0
    couplings = np.geomspace(0.1, 100.0, 20)
    worst_root = 0.0
    worst_trip = 0.0
    for u0 in couplings:
        u0 = float(u0)
        k_closed = k_from_coupling(u0, cutoff)
        k_root = _quadrature_root(u0, cutoff, k_closed)
        worst_root = max(worst_root, abs(k_root - k_closed) / k_closed)
        worst_trip = max(
            worst_trip, abs(coupling_from_k(k_closed, cutoff) - u0) / u0
        )
    return [
        _res(
            "delta-coupling-root",
            worst_root,
            1e-10,
            scale,
            "20 couplings spanning [0.1, 100] at unit cutoff",
        ),
        _res("delta-coupling-roundtrip", worst_trip, 1e-12, scale, "same couplings"),
    ]


def suite_density_geometry(scale: float = 1.0) -> list[SuiteResult]:
    """Shape statements: ring node and peak, origin maxima, origin cusp."""
    out = []
    k = 1.0
    radii = np.linspace(0.0, 8.0, 2001)
    w2 = density_profile(2, k, radii)
    slopes = np.sign(np.diff(w2))
    nz = slopes[slopes != 0.0]
    turns = int(np.count_nonzero(nz[1:] != nz[:-1]))
    err = abs(w2[0]) + abs(turns - 1)
    out.append(
        _res("ring-node-and-unimodality", err, 0.0, scale, "zero at origin, single interior peak")
    )
    xi = ring_peak_parameter()
    foc = abs(besselk(0, xi) - 2.0 * xi * besselk(1, xi))
    out.append(
        _res(
            "ring-peak-stationarity",
            foc,
            1e-10,
            scale,
            f"stationarity defect at xi = {xi:.12f}",
        )
    )
    worst = 0.0
    for dim in (1, 3):
        pd = density(dim, k, np.linspace(0.0, 10.0, 501))
        loc, val = density_maximum(pd)
        worst = max(worst, abs(loc), float(np.max(pd.weights) - val))
    pd2 = density(2, k, radii)
    loc2, val2 = density_maximum(pd2)
    if not loc2 > 0.0:
        worst = max(worst, 1.0)
    worst = max(worst, float(np.max(w2) - val2))
    out.append(
        _res(
            "density-maxima",
            max(0.0, worst),
            0.0,
            scale,
            "origin maxima for line/spatial, interior ring otherwise",
        )
    )
    d2 = [2.0 * density_profile(2, k, d) / (d * d) for d in (1e-2, 1e-3, 1e-4)]
    ratio_min = min(d2[1] / d2[0], d2[2] / d2[1])
    out.append(
        _res(
            "ring-cusp-divergence",
            max(0.0, 5.0 - ratio_min),
            0.0,
            scale,
            "second difference across the origin grows without bound",
        )
    )
    return out


_ALL_SUITES = (
    suite_wronskians,
    suite_sommerfeld,
    suite_special_limits,
    suite_radial,
    suite_normalization,
    suite_nodes,
    suite_dimensions,
    suite_delta_coupling,
    suite_density_geometry,
)


def run_all(tolerance_scale: float = 1.0) -> list[SuiteResult]:
    """Run every suite in a fixed order and return the flat result list."""
    if not (math.isfinite(tolerance_scale) and tolerance_scale >= 0.0):
        raise ValueError(
            f"tolerance_scale must be a non-negative finite number, got {tolerance_scale!r}"
        )
    results: list[SuiteResult] = []
    for suite in _ALL_SUITES:
        results.extend(suite(tolerance_scale))
    return results
