"""Bound states of an attractive contact (delta) potential in 1, 2 and 3 D.

Each dimension binds a single state of energy E = -k^2/2 (units
hbar = M = 1) whose radial probability weight is

    N = 1:  W(x) = k exp(-2 k |x|)            maximal at the origin
    N = 2:  W(r) = 2 k^2 r K_0(k r)^2         zero at the origin, ring-shaped
    N = 3:  W(r) = 2 k exp(-2 k r)            maximal at the origin

The planar case is the odd one out: the -1/(4 r^2) effective attraction
drags the decaying cylinder wave into a profile whose most probable radius
sits at a finite ring r = xi / k, with xi a universal constant. The planar
wavenumber also needs regularization; with a sharp momentum cutoff L the
coupling U0 > 0 and the wavenumber are tied by

    k = L / sqrt(exp(4 pi / U0) - 1).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum, unique
from functools import lru_cache

import numpy as np

from .quadrature import gauss_kronrod_15, integrate_adaptive
from .radial import RadialGrid
from .specfun import besselk

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_UNDERFLOW_FRACTION = 1e-300


@unique
class DensityForm(Enum):
    EXP_LINE = "line"      # N = 1, two-sided exponential in |x|
    RING = "ring"          # N = 2, r K_0(k r)^2 profile
    EXP_RADIAL = "radial"  # N = 3, exponential in r

    @staticmethod
    def for_dimension(dimension: int) -> "DensityForm":
        try:
            return {1: DensityForm.EXP_LINE, 2: DensityForm.RING, 3: DensityForm.EXP_RADIAL}[
                dimension
            ]
        except KeyError:
            raise ValueError(f"dimension must be 1, 2 or 3, got {dimension!r}") from None


def _check_k(k: float) -> float:
    if not (isinstance(k, (int, float)) and math.isfinite(k) and k > 0.0):
        raise ValueError(f"wavenumber must be positive and finite, got {k!r}")
    return float(k)


def density_profile(dimension: int, k: float, r):
    """Radial probability weight W(r) of the bound state; scalar or array."""
    form = DensityForm.for_dimension(dimension)
    k = _check_k(k)
    arr = np.asarray(r, dtype=float)
    scalar = arr.ndim == 0
    flat = np.atleast_1d(arr)
    if flat.size and not np.all(np.isfinite(flat)):
        raise ValueError("radii must be finite")
    if form is not DensityForm.EXP_LINE and flat.size and np.any(flat < 0.0):
        raise ValueError("radii must be non-negative")
    if form is DensityForm.EXP_LINE:
        out = k * np.exp(-2.0 * k * np.abs(flat))
    elif form is DensityForm.EXP_RADIAL:
        out = 2.0 * k * np.exp(-2.0 * k * flat)
    else:
        out = np.empty(flat.shape)
        for i, ri in enumerate(flat):
            # r K_0(k r)^2 -> 0 as r -> 0 despite the log divergence
            out[i] = 0.0 if ri == 0.0 else 2.0 * k * k * ri * besselk(0, k * ri) ** 2
    return float(out[0]) if scalar else out


@dataclass(frozen=True)
class ProbabilityDensity:
    """Sampled bound-state weight for one dimension and wavenumber."""

    dimension: int
    wavenumber: float
    radii: np.ndarray
    weights: np.ndarray
    form: DensityForm

    @property
    def energy(self) -> float:
        return -0.5 * self.wavenumber**2


def density(dimension: int, k: float, grid) -> ProbabilityDensity:
    """Sample W on ``grid`` (a RadialGrid or an array of radii)."""
    if isinstance(grid, RadialGrid):
        radii = grid.points
    else:
        radii = np.asarray(grid, dtype=float)
        if radii.ndim != 1 or radii.size == 0:
            raise ValueError("grid must be a RadialGrid or a 1-d array of radii")
    w = density_profile(dimension, k, radii)
    return ProbabilityDensity(
        dimension, _check_k(k), radii, w, DensityForm.for_dimension(dimension)
    )


def normalize_check(pd: ProbabilityDensity, *, rel_tol: float = 1e-10) -> float:
    """Total probability from adaptive quadrature of the sampled form.

    Integrates W out to a radius where the analytic tail is negligible
    (at least 40 / k) and adds the exact exponential tail for the
    line and radial forms. For the ring form the tail beyond 40 / k is
    bounded above by (pi/2) (1 + 1/(8 xi))^2 exp(-2 xi), far below any
    tolerance used here; a warning is issued if that bound is not
    negligible against ``rel_tol``.
    """
    k = pd.wavenumber
    r_cut = 40.0 / k
    inner_tol = min(1e-12, 0.1 * rel_tol)
    f = lambda x: density_profile(pd.dimension, k, x)
    if pd.form is DensityForm.EXP_LINE:
        core = 2.0 * integrate_adaptive(f, 0.0, r_cut, rel_tol=inner_tol).value
        tail = math.exp(-2.0 * k * r_cut)
    elif pd.form is DensityForm.EXP_RADIAL:
        core = integrate_adaptive(f, 0.0, r_cut, rel_tol=inner_tol).value
        tail = math.exp(-2.0 * k * r_cut)
    else:
        core = integrate_adaptive(f, 0.0, r_cut, rel_tol=inner_tol).value
        xi = k * r_cut
        bound = 0.5 * math.pi * (1.0 + 1.0 / (8.0 * xi)) ** 2 * math.exp(-2.0 * xi)
        tail = 0.0
        if bound > 0.01 * rel_tol:
            warnings.warn(
                f"ring tail bound {bound:.3e} is not negligible at rel_tol={rel_tol}",
                RuntimeWarning,
                stacklevel=2,
            )
    return core + tail


@lru_cache(maxsize=1)
def ring_peak_parameter() -> float:
    """The universal ring constant xi solving K_0(xi) = 2 xi K_1(xi).

    Found by scanning xi K_0(xi)^2 for its interior maximum, narrowing
    with golden-section search, then polishing the stationarity condition
    with bisection. The most probable planar radius is xi / k.
    """
    profile = lambda x: x * besselk(0, x) ** 2
    slope = lambda x: besselk(0, x) - 2.0 * x * besselk(1, x)
    xs = [0.01 * j for j in range(1, 201)]
    vals = [profile(x) for x in xs]
    i = max(range(1, len(xs) - 1), key=lambda j: vals[j])
    lo, hi = xs[i - 1], xs[i + 1]
    # golden-section down to a short interval around the maximum
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = profile(c), profile(d)
    while b - a > 1e-6:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = profile(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = profile(d)
    # stationarity condition has a sign change across the maximum; polish it
    pad = 1e-3
    lo, hi = 0.5 * (a + b) - pad, 0.5 * (a + b) + pad
    slo, shi = slope(lo), slope(hi)
    if (slo > 0) == (shi > 0):
        raise ArithmeticError("stationarity condition does not bracket the peak")
    while hi - lo > 1e-13:
        mid = 0.5 * (lo + hi)
        sm = slope(mid)
        if sm == 0.0:
            return mid
        if (sm > 0) == (slo > 0):
            lo, slo = mid, sm
        else:
            hi, shi = mid, sm
    return 0.5 * (lo + hi)


def density_maximum(pd: ProbabilityDensity) -> tuple[float, float]:
    """Location and value of the global maximum of W.

    Closed forms for the monotone exponential cases; the ring case uses
    the cached universal constant.
    """
    k = pd.wavenumber
    if pd.form is DensityForm.EXP_LINE:
        return 0.0, k
    if pd.form is DensityForm.EXP_RADIAL:
        return 0.0, 2.0 * k
    xi = ring_peak_parameter()
    loc = xi / k
    return loc, density_profile(2, k, loc)


# --- planar coupling regularized by a sharp momentum cutoff ---------------


def cutoff_integral(k: float, cutoff: float) -> float:
    """Quadrature value of the loop integral int_0^L p / (p^2 + k^2) dp.

    Split into dyadic panels from the cutoff down to well below the scale
    of k, so the integrand's poles at +-ik stay far from every panel and a
    fixed Kronrod rule resolves each one; the final stub below k/64 is
    nearly linear. Used as the slow, independent route to the coupling
    relation (the closed form is ln(1 + L^2/k^2) / 2).
    """
    k = _check_k(k)
    if not (isinstance(cutoff, (int, float)) and math.isfinite(cutoff) and cutoff > 0.0):
        raise ValueError(f"cutoff must be positive and finite, got {cutoff!r}")
    edges = [float(cutoff)]
    while edges[-1] > k / 64.0 and len(edges) < 2000:
        edges.append(0.5 * edges[-1])
    edges.append(0.0)
    edges.reverse()
    f = lambda p: p / (p * p + k * k)
    total = 0.0
    err = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        v, e = gauss_kronrod_15(f, a, b)
        total += v
        err += e
    if err > 1e-10 * max(abs(total), 1.0):
        raise ArithmeticError(
            f"cutoff integral error estimate {err:.3e} too large for total {total:.6e}"
        )
    return total


def k_from_coupling(coupling: float, cutoff: float) -> float:
    """Bound-state wavenumber of the planar delta well at coupling U0 > 0.

    Inverts 1 = (U0 / 2 pi) * ln(1 + L^2/k^2) / 2 for k, switching to the
    asymptotic form k = L exp(-2 pi / U0) once exp(4 pi / U0) overflows.
    Warns when the result underflows to within a few decades of the
    smallest positive double.
    """
    if not (isinstance(coupling, (int, float)) and math.isfinite(coupling)):
        raise ValueError(f"coupling must be finite, got {coupling!r}")
    if not (isinstance(cutoff, (int, float)) and math.isfinite(cutoff) and cutoff > 0.0):
        raise ValueError(f"cutoff must be positive and finite, got {cutoff!r}")
    if coupling == 0.0:
        raise ValueError("zero coupling binds no state")
    if coupling < 0.0:
        raise ValueError(
            "negative couplings have no real wavenumber under a sharp momentum "
            "cutoff; parametrize the state by k and use coupling_from_k"
        )
    expo = 4.0 * math.pi / coupling
    if expo <= 700.0:
        k = cutoff / math.sqrt(math.expm1(expo))
    else:
        k = cutoff * math.exp(-0.5 * expo)
    if k < _UNDERFLOW_FRACTION * cutoff:
        warnings.warn(
            f"wavenumber {k:.3e} underflows toward the double-precision floor "
            f"at coupling {coupling}",
            RuntimeWarning,
            stacklevel=2,
        )
    return k


def coupling_from_k(k: float, cutoff: float) -> float:
    """Coupling U0 that places the planar bound state at wavenumber k.

    Worked in log space so that wavenumbers many decades below the
    cutoff (where (L/k)^2 would overflow a double) still invert; in that
    regime ln(1 + L^2/k^2) equals 2 ln(L/k) to full precision.
    """
    k = _check_k(k)
    if not (isinstance(cutoff, (int, float)) and math.isfinite(cutoff) and cutoff > 0.0):
        raise ValueError(f"cutoff must be positive and finite, got {cutoff!r}")
    log_ratio = math.log(cutoff) - math.log(k)
    if log_ratio > 180.0:
        denom = 2.0 * log_ratio
    else:
        denom = math.log1p((cutoff / k) ** 2)
    if denom <= 0.0:
        raise OverflowError(
            f"wavenumber {k:.3e} sits so far above the cutoff {cutoff:.3e} that "
            "the coupling relation saturates in double precision"
        )
    return 4.0 * math.pi / denom


def coupling_residual(coupling: float, cutoff: float, k: float) -> float:
    """Defect |(U0 / 2 pi) * I(k, L) - 1| with I evaluated by quadrature.

    Routes the self-consistency condition through the numeric loop
    integral rather than the closed form, so it cross-checks both
    k_from_coupling and the quadrature.
    """
    if not (isinstance(coupling, (int, float)) and math.isfinite(coupling) and coupling > 0.0):
        raise ValueError(f"coupling must be positive and finite, got {coupling!r}")
    return abs(coupling / (2.0 * math.pi) * cutoff_integral(k, cutoff) - 1.0)


@dataclass(frozen=True)
class DeltaCoupling2D:
    """A planar delta well: coupling, momentum cutoff and wavenumber."""

    coupling: float
    cutoff: float
    wavenumber: float

    @staticmethod
    def from_coupling(coupling: float, cutoff: float) -> "DeltaCoupling2D":
        return DeltaCoupling2D(coupling, cutoff, k_from_coupling(coupling, cutoff))

    @staticmethod
    def from_wavenumber(k: float, cutoff: float) -> "DeltaCoupling2D":
        return DeltaCoupling2D(coupling_from_k(k, cutoff), cutoff, k)

    @property
    def energy(self) -> float:
        return -0.5 * self.wavenumber**2


# --- closed-form bound states in one and three dimensions -----------------


@dataclass(frozen=True)
class DeltaBoundState:
    dimension: int
    wavenumber: float
    energy: float


def one_three_d_bound_energy(
    dimension: int,
    *,
    coupling: float | None = None,
    inverse_scattering_length: float | None = None,
) -> DeltaBoundState:
    """Closed-form bound state of the contact potential in 1 D or 3 D.

    The line case takes the (negative) coupling U0 of U0 * delta(x) and
    binds at k = |U0| / 2. The spatial case is parametrized by the inverse
    scattering length, which must be positive for a bound state and equals
    k directly. The planar case is excluded here because it needs the
    regularized treatment of DeltaCoupling2D.
    """
    if dimension == 1:
        if coupling is None:
            raise ValueError("the line case needs the coupling")
        if not (isinstance(coupling, (int, float)) and math.isfinite(coupling)):
            raise ValueError(f"coupling must be finite, got {coupling!r}")
        if coupling >= 0.0:
            raise ValueError("the line delta binds only for negative coupling")
        k = 0.5 * abs(coupling)
        return DeltaBoundState(1, k, -0.5 * k * k)
    if dimension == 3:
        if inverse_scattering_length is None:
            raise ValueError("the spatial case needs the inverse scattering length")
        a_inv = inverse_scattering_length
        if not (isinstance(a_inv, (int, float)) and math.isfinite(a_inv)):
            raise ValueError(f"inverse scattering length must be finite, got {a_inv!r}")
        if a_inv <= 0.0:
            raise ValueError(
                "the spatial contact potential binds only for positive inverse "
                "scattering length"
            )
        return DeltaBoundState(3, a_inv, -0.5 * a_inv * a_inv)
    if dimension == 2:
        raise ValueError("use DeltaCoupling2D for the planar case")
    raise ValueError(f"dimension must be 1, 2 or 3, got {dimension!r}")


def phi_line(k: float, x) -> np.ndarray | float:
    """Normalized line bound-state amplitude sqrt(k) exp(-k |x|)."""
    k = _check_k(k)
    arr = np.asarray(x, dtype=float)
    out = math.sqrt(k) * np.exp(-k * np.abs(arr))
    return float(out) if arr.ndim == 0 else out


def phi_point(k: float, r) -> np.ndarray | float:
    """Normalized spatial amplitude sqrt(k / 2 pi) exp(-k r) / r."""
    k = _check_k(k)
    arr = np.asarray(r, dtype=float)
    if arr.ndim == 0:
        rv = float(arr)
        if rv <= 0.0:
            raise ValueError("the spatial amplitude requires r > 0")
        return math.sqrt(k / (2.0 * math.pi)) * math.exp(-k * rv) / rv
    if arr.size and not np.all(arr > 0.0):
        raise ValueError("the spatial amplitude requires r > 0")
    return math.sqrt(k / (2.0 * math.pi)) * np.exp(-k * arr) / arr
