"""Zero tables and node-density statistics for the oscillatory waves.

The positive zeros of the order-0 and order-1 oscillatory cylinder
functions encode how the -1/(4r^2) term redistributes probability: both
spacings approach pi from opposite sides, so the local node density
pi / spacing sits above one for order 0 (nodes bunch together near the
axis) and below one for order 1 (nodes spread apart). These statistics
are what the verification suites and the command line report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .specfun import CylinderFamily, besselj, bessely

_SCAN_START = {CylinderFamily.BESSEL_J: 1e-9, CylinderFamily.NEUMANN_Y: 1e-6}


class BracketingError(RuntimeError):
    """Raised when a sign change cannot be located where one is expected."""


def _evaluator(family: CylinderFamily, order: int) -> Callable[[float], float]:
    if family is CylinderFamily.BESSEL_J:
        return lambda x: besselj(order, x)
    if family is CylinderFamily.NEUMANN_Y:
        return lambda x: bessely(order, x)
    raise ValueError(f"zero tables exist for the oscillatory families only, got {family!r}")


def refine_zero(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    tol: float = 1e-12,
    method: str = "bisect",
) -> float:
    """Polish a bracketed simple zero of f to width ``tol``.

    ``method`` selects plain bisection or a secant iteration that falls
    back to bisection whenever its step leaves the bracket; the two agree
    to the tolerance and serve as cross-checks on each other.
    """
    if not (lo < hi):
        raise ValueError(f"invalid bracket [{lo}, {hi}]")
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BracketingError(f"no sign change on [{lo}, {hi}]")
    if method == "bisect":
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            fm = f(mid)
            if fm == 0.0:
                return mid
            if (fm > 0) == (flo > 0):
                lo, flo = mid, fm
            else:
                hi, fhi = mid, fm
        return 0.5 * (lo + hi)
    if method == "secant":
        a, fa = lo, flo
        b, fb = hi, fhi
        for _ in range(200):
            if fb == fa:
                x = 0.5 * (lo + hi)
            else:
                x = b - fb * (b - a) / (fb - fa)
                if not (lo < x < hi):
                    x = 0.5 * (lo + hi)
            fx = f(x)
            if fx == 0.0:
                return x
            if (fx > 0) == (flo > 0):
                lo, flo = x, fx
            else:
                hi, fhi = x, fx
            a, fa = b, fb
            b, fb = x, fx
            if hi - lo <= tol:
                return 0.5 * (lo + hi)
        return 0.5 * (lo + hi)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class ZeroTable:
    """The first positive zeros of one oscillatory cylinder function."""

    family: CylinderFamily
    order: int
    zeros: np.ndarray

    def __post_init__(self) -> None:
        z = np.asarray(self.zeros, dtype=float)
        object.__setattr__(self, "zeros", z)
        if z.ndim != 1 or z.size == 0:
            raise ValueError("zeros must be a non-empty 1-d array")
        if not np.all(z > 0.0):
            raise ValueError("zeros must be positive")
        d = np.diff(z)
        if z.size > 1 and not np.all(d > 0.0):
            raise ValueError("zeros must be strictly increasing")
        # Consecutive-zero spacings of the low orders stay within one
        # period of the asymptotic wavelength; a spacing outside (2, 2 pi)
        # means the scan skipped a zero or found a spurious one.
        if self.order <= 1 and z.size > 1:
            if not np.all((d > 2.0) & (d < 2.0 * math.pi)):
                raise ValueError("spacings outside (2, 2 pi); zero table is corrupt")

    def __len__(self) -> int:
        return int(self.zeros.size)


def find_zeros(
    family: CylinderFamily,
    order: int,
    n_max: int,
    *,
    scan_step: float = 0.1,
    tol: float = 1e-12,
) -> ZeroTable:
    """Locate the first ``n_max`` positive zeros by scan plus bisection.

    The function is sampled every ``scan_step`` starting just above the
    origin; each sign change is polished by bisection to width ``tol``.
    The step is far below the minimum zero spacing (> 2), so no zero can
    be skipped; tangencies do not occur for these functions.
    """
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 1:
        raise ValueError(f"n_max must be a positive int, got {n_max!r}")
    if order not in (0, 1):
        raise ValueError(
            f"zero scanning is tuned for orders 0 and 1, got {order!r}"
        )
    if not (0.0 < scan_step <= 0.5):
        raise ValueError(f"scan_step must lie in (0, 0.5], got {scan_step}")
    f = _evaluator(family, order)
    x_prev = _SCAN_START[family]
    f_prev = f(x_prev)
    limit = (n_max + 4) * math.pi + 2.0 * order + 20.0
    zeros: list[float] = []
    while len(zeros) < n_max:
        x_next = x_prev + scan_step
        f_next = f(x_next)
        if f_next == 0.0:
            zeros.append(x_next)
        elif (f_prev > 0) != (f_next > 0):
            zeros.append(refine_zero(f, x_prev, x_next, tol=tol))
        x_prev, f_prev = x_next, f_next
        if x_prev > limit:
            raise BracketingError(
                f"found only {len(zeros)} of {n_max} zeros below x = {limit:.1f}"
            )
    return ZeroTable(family, order, np.array(zeros[:n_max]))


@dataclass(frozen=True)
class NodeDensityReport:
    """Spacings and local node densities derived from a zero table.

    ``spacings[n]`` is zeros[n+1] - zeros[n] and ``densities[n]`` is
    pi / spacings[n], the node count per asymptotic half-wavelength.
    """

    table: ZeroTable
    spacings: np.ndarray
    densities: np.ndarray


def node_density(table: ZeroTable) -> NodeDensityReport:
    if len(table) < 2:
        raise ValueError("node density needs at least two zeros")
    spacings = np.diff(table.zeros)
    return NodeDensityReport(table, spacings, math.pi / spacings)


@dataclass(frozen=True)
class BunchingVerdict:
    """Outcome of the bunching / anti-bunching comparison for one family.

    Order 0 must hold densities above one that decrease toward one, and
    order 1 densities below one that increase toward one. ``max_violation``
    is the worst margin by which any of the four statements fails (zero
    when all hold).
    """

    family: CylinderFamily
    count: int
    order0_bunched: bool
    order1_antibunched: bool
    order0_monotone: bool
    order1_monotone: bool
    max_violation: float

    @property
    def passed(self) -> bool:
        return (
            self.order0_bunched
            and self.order1_antibunched
            and self.order0_monotone
            and self.order1_monotone
        )


def bunching_verdict(
    zero_order: NodeDensityReport, first_order: NodeDensityReport
) -> BunchingVerdict:
    t0, t1 = zero_order.table, first_order.table
    if t0.family is not t1.family:
        raise ValueError("reports compare different families")
    if (t0.order, t1.order) != (0, 1):
        raise ValueError(
            f"expected orders (0, 1), got ({t0.order}, {t1.order})"
        )
    count = min(zero_order.densities.size, first_order.densities.size)
    g0 = zero_order.densities[:count]
    g1 = first_order.densities[:count]
    viol = [
        float(np.max(1.0 - g0)),          # order 0 must stay above one
        float(np.max(g1 - 1.0)),          # order 1 must stay below one
        float(np.max(np.diff(g0), initial=-math.inf)),   # must decrease
        float(np.max(-np.diff(g1), initial=-math.inf)),  # must increase
    ]
    return BunchingVerdict(
        family=t0.family,
        count=count,
        order0_bunched=viol[0] < 0.0,
        order1_antibunched=viol[1] < 0.0,
        order0_monotone=viol[2] < 0.0,
        order1_monotone=viol[3] < 0.0,
        max_violation=max(0.0, *viol),
    )
