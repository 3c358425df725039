"""Integer-order cylinder functions built from scratch in double precision.

Evaluates the oscillatory pair J_m, Y_m and the modified pair I_m, K_m for
non-negative integer order on the positive real axis, plus their first
derivatives and a direct angular-quadrature route to J_0.  No external
special-function library is used; every value comes from one of four
classical schemes, selected by argument size:

* ascending power series near the origin (log-augmented for Y_m and K_m),
* backward (Miller) recurrence with a sum-rule normalization for J_m and
  I_m at moderate and large arguments,
* a Neumann-type series over the Miller table for Y_0 and Y_1,
* an exponentially convergent trapezoid on the cosh-integral for K_m.

Each scheme is used only where it is well conditioned, so plain double
arithmetic holds the relative error near 1e-14 across the supported range
(target: 1e-12 on (0, 50]).  Orders above 1 come from the three-term
recurrence in whichever direction is stable for the family.

All functions are pure; the only shared state is a bounded memo of
per-argument recurrence tables, which is safe under concurrent callers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

EULER_GAMMA = 0.57721566490153286061

#: Relative accuracy targeted on the primary argument range (0, 50].
TARGET_REL_ERROR = 1e-12

#: Below these arguments the ascending series is used; at and above them the
#: large-argument scheme takes over.  Each point sits where both schemes are
#: simultaneously good to ~1e-13, so the crossover is seamless.
SERIES_SWITCH_JY = 2.0
SERIES_SWITCH_I = 8.0
SERIES_SWITCH_K = 3.0

#: I_m overflows double precision shortly above this argument.
MAX_ARGUMENT_I = 700.0

_MEMO_SIZE = 4096


class CylinderFamily(Enum):
    """The four integer-order cylinder function families."""

    BESSEL_J = "J"
    NEUMANN_Y = "Y"
    MODIFIED_I = "I"
    MODIFIED_K = "K"


@dataclass(frozen=True)
class CylinderKind:
    """A family tag plus a non-negative integer order."""

    family: CylinderFamily
    order: int

    def __post_init__(self):
        if not isinstance(self.family, CylinderFamily):
            raise ValueError(f"family must be a CylinderFamily, got {self.family!r}")
        if not isinstance(self.order, int) or isinstance(self.order, bool):
            raise ValueError(f"order must be an integer, got {self.order!r}")
        if self.order < 0:
            raise ValueError(f"order must be non-negative, got {self.order}")


def _check_argument(family: CylinderFamily, x: float) -> float:
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"argument must be finite, got {x!r}")
    if family in (CylinderFamily.BESSEL_J, CylinderFamily.MODIFIED_I):
        if x < 0.0:
            raise ValueError(f"{family.value}_m requires x >= 0, got {x}")
    else:
        if x <= 0.0:
            raise ValueError(f"{family.value}_m requires x > 0, got {x}")
    if family is CylinderFamily.MODIFIED_I and x > MAX_ARGUMENT_I:
        raise OverflowError(
            f"I_m({x}) would exceed the double-precision range (limit x <= {MAX_ARGUMENT_I:g})"
        )
    return x


# ----------------------------------------------------------------------
# ascending series (small argument)
# ----------------------------------------------------------------------

def _j_series(m: int, x: float) -> float:
    # J_m(x) = sum_k (-1)^k (x/2)^(m+2k) / (k! (m+k)!)
    half = 0.5 * x
    q = half * half
    term = 1.0
    for i in range(1, m + 1):
        term *= half / i
    total = term
    k = 0
    while True:
        k += 1
        term *= -q / (k * (k + m))
        total += term
        if abs(term) <= 1e-17 * abs(total) or k > 200:
            return total


def _i_series(m: int, x: float) -> float:
    # Same series as J_m with all signs positive; perfectly conditioned.
    half = 0.5 * x
    q = half * half
    term = 1.0
    for i in range(1, m + 1):
        term *= half / i
    total = term
    k = 0
    while True:
        k += 1
        term *= q / (k * (k + m))
        total += term
        if term <= 1e-17 * total or k > 500:
            return total


@lru_cache(maxsize=_MEMO_SIZE)
def _y01_series(x: float) -> tuple[float, float]:
    """Y_0 and Y_1 from the log-augmented ascending series (x below the switch)."""
    q = 0.25 * x * x
    lg = math.log(0.5 * x)
    j0 = _j_series(0, x)
    j1 = _j_series(1, x)

    # sum_{k>=1} (-1)^(k+1) H_k q^k / (k!)^2
    s0 = 0.0
    term = 1.0
    h = 0.0
    k = 0
    while True:
        k += 1
        term *= q / (k * k)
        h += 1.0 / k
        piece = term * h if k % 2 else -term * h
        s0 += piece
        if term * h <= 1e-17 * (abs(s0) + 1e-30) or k > 60:
            break
    y0 = (2.0 / math.pi) * ((lg + EULER_GAMMA) * j0 + s0)

    # sum_{k>=0} (-1)^k (H_k + H_{k+1} - 2*gamma) q^k / (k! (k+1)!)
    s1 = 0.0
    term = 1.0
    hk = 0.0
    k = 0
    while True:
        coeff = hk + hk + 1.0 / (k + 1) - 2.0 * EULER_GAMMA
        piece = term * coeff
        s1 += piece if k % 2 == 0 else -piece
        k += 1
        term *= q / (k * (k + 1))
        hk += 1.0 / k
        if term * (2.0 * hk + 1.0) <= 1e-17 * (abs(s1) + 1e-30) or k > 60:
            break
    y1 = (2.0 / math.pi) * lg * j1 - 2.0 / (math.pi * x) - (x / (2.0 * math.pi)) * s1
    return y0, y1


@lru_cache(maxsize=_MEMO_SIZE)
def _k01_series(x: float) -> tuple[float, float]:
    """K_0 and K_1 from the log-augmented ascending series (x below the switch)."""
    q = 0.25 * x * x
    lg = math.log(0.5 * x)
    i0 = _i_series(0, x)
    i1 = _i_series(1, x)

    s0 = 0.0
    term = 1.0
    h = 0.0
    k = 0
    while True:
        k += 1
        term *= q / (k * k)
        h += 1.0 / k
        s0 += term * h
        if term * h <= 1e-17 * (s0 + 1e-30) or k > 60:
            break
    k0 = -(lg + EULER_GAMMA) * i0 + s0

    s1 = 0.0
    term = 1.0
    hk = 0.0
    k = 0
    while True:
        coeff = hk + hk + 1.0 / (k + 1) - 2.0 * EULER_GAMMA
        s1 += term * coeff
        k += 1
        term *= q / (k * (k + 1))
        hk += 1.0 / k
        if term * (2.0 * hk + 1.0) <= 1e-17 * (abs(s1) + 1e-30) or k > 60:
            break
    k1 = 1.0 / x + lg * i1 - 0.25 * x * s1
    return k0, k1


# ----------------------------------------------------------------------
# backward recurrence (Miller) tables
# ----------------------------------------------------------------------

def _rescale(tail: list, top: int, k: int, *scalars: float):
    for i in range(k, top + 1):
        tail[i] *= 1e-250
    return tuple(s * 1e-250 for s in scalars)


@lru_cache(maxsize=_MEMO_SIZE)
def _j_table(x: float) -> tuple[float, ...]:
    """Normalized J_0..J_M by downward recurrence, M comfortably past the
    Airy turning point so the start order carries no contamination."""
    top = int(x + 12.0 * (0.5 * x + 1.0) ** (1.0 / 3.0)) + 18
    if top % 2:
        top += 1
    table = [0.0] * (top + 1)
    jp = 0.0
    jc = 1e-300
    table[top] = jc
    even_sum = jc  # top is even and >= 2
    k = top
    while k > 0:
        jm = (2.0 * k / x) * jc - jp
        k -= 1
        jp, jc = jc, jm
        if abs(jc) > 1e250:
            jp, jc, even_sum = _rescale(table, top, k + 1, jp, jc, even_sum)
        table[k] = jc
        if k >= 2 and k % 2 == 0:
            even_sum += jc
    norm = 1.0 / (jc + 2.0 * even_sum)  # sum rule J_0 + 2*sum_{k>=1} J_{2k} = 1
    return tuple(v * norm for v in table)


@lru_cache(maxsize=_MEMO_SIZE)
def _y01_large(x: float) -> tuple[float, float]:
    """Y_0 and Y_1 from Neumann-type series over the Miller J table.

    Y_0 = (2/pi)(ln(x/2)+gamma) J_0 + (4/pi) sum_k (-1)^(k+1) J_{2k}/k and
    Y_1 = -Y_0', with every J and J' read off the normalized table, so the
    accuracy matches the table itself (~1e-15 of the envelope).
    """
    t = _j_table(x)
    lg = math.log(0.5 * x) + EULER_GAMMA
    top = len(t) - 1
    s0 = 0.0
    s1 = 0.0
    sign = 1.0
    k = 1
    while 2 * k + 1 <= top:
        s0 += sign * t[2 * k] / k
        s1 += sign * (t[2 * k - 1] - t[2 * k + 1]) / (2.0 * k)
        sign = -sign
        k += 1
    y0 = (2.0 / math.pi) * lg * t[0] + (4.0 / math.pi) * s0
    dy0 = (2.0 / math.pi) * (t[0] / x - lg * t[1]) + (4.0 / math.pi) * s1
    return y0, -dy0


@lru_cache(maxsize=_MEMO_SIZE)
def _i_table(x: float) -> tuple[float, ...]:
    """Normalized I_0..I_M by downward recurrence with the e^x sum rule.

    Every term in the normalization sum is positive, so the result carries
    plain rounding error only.  M sits past the e^(-m^2/2x) decay band.
    """
    top = int(1.2 * math.sqrt(92.0 * x)) + 30
    table = [0.0] * (top + 1)
    ip = 0.0
    ic = 1e-300
    table[top] = ic
    total = ic
    k = top
    while k > 0:
        im = ip + (2.0 * k / x) * ic
        k -= 1
        ip, ic = ic, im
        if abs(ic) > 1e250:
            ip, ic, total = _rescale(table, top, k + 1, ip, ic, total)
        table[k] = ic
        if k >= 1:
            total += ic
    # Sum rule I_0 + 2*sum_{k>=1} I_k = e^x.  Divide by the unnormalized sum
    # first: v/denom is I_m/e^x <= 1, so no intermediate can overflow even
    # though e^x/denom alone would.
    denom = ic + 2.0 * total
    ex = math.exp(x)
    return tuple((v / denom) * ex for v in table)


@lru_cache(maxsize=_MEMO_SIZE)
def _k01_large(x: float) -> tuple[float, float]:
    """K_0 and K_1 by trapezoid sums on K_m(x) = int_0^inf e^(-x cosh t) cosh(mt) dt.

    The integrand extends to an even analytic function of t, so the
    trapezoid converges geometrically; the step is shrunk like 1/sqrt(x)
    once the integrand narrows to a Gaussian.
    """
    h = min(0.15, 0.7 / math.sqrt(x))
    f0 = math.exp(-x)
    s0 = 0.5 * f0
    s1 = 0.5 * f0
    j = 1
    while True:
        t = j * h
        c = math.cosh(t)
        f = math.exp(-x * c)
        s0 += f
        s1 += f * c
        if x * (c - 1.0) > 55.0 and j >= 3:
            break
        j += 1
        if j > 200000:  # unreachable; defensive
            raise ArithmeticError("trapezoid failed to terminate")
    return h * s0, h * s1


# ----------------------------------------------------------------------
# per-family dispatch
# ----------------------------------------------------------------------

def besselj(m: int, x: float) -> float:
    """J_m(x) for integer m >= 0, x >= 0."""
    x = _check_argument(CylinderFamily.BESSEL_J, x)
    if x < SERIES_SWITCH_JY:
        return _j_series(m, x)
    table = _j_table(x)
    if m < len(table):
        return table[m]
    return _j_series(m, x)  # order far past the turning point: series is safe


def bessely(m: int, x: float) -> float:
    """Y_m(x) for integer m >= 0, x > 0."""
    x = _check_argument(CylinderFamily.NEUMANN_Y, x)
    y0, y1 = _y01_series(x) if x < SERIES_SWITCH_JY else _y01_large(x)
    return _recur_up(m, x, y0, y1, "Y")


def besseli(m: int, x: float) -> float:
    """I_m(x) for integer m >= 0, 0 <= x <= 700."""
    x = _check_argument(CylinderFamily.MODIFIED_I, x)
    if x < SERIES_SWITCH_I:
        return _i_series(m, x)
    table = _i_table(x)
    if m < len(table):
        return table[m]
    return _i_series(m, x)


def besselk(m: int, x: float) -> float:
    """K_m(x) for integer m >= 0, x > 0."""
    x = _check_argument(CylinderFamily.MODIFIED_K, x)
    k0, k1 = _k01_series(x) if x < SERIES_SWITCH_K else _k01_large(x)
    return _recur_up(m, x, k0, k1, "K")


def _recur_up(m: int, x: float, f0: float, f1: float, tag: str) -> float:
    # Upward three-term recurrence; stable for Y and K, whose magnitude
    # grows with order.
    if m == 0:
        return f0
    if m == 1:
        return f1
    prev, cur = f0, f1
    if tag == "K":
        for k in range(1, m):
            prev, cur = cur, prev + (2.0 * k / x) * cur
    else:
        for k in range(1, m):
            prev, cur = cur, (2.0 * k / x) * cur - prev
    if math.isinf(cur):
        raise OverflowError(f"{tag}_{m}({x}) exceeds the double-precision range")
    return cur


_FAMILY_EVAL = {
    CylinderFamily.BESSEL_J: besselj,
    CylinderFamily.NEUMANN_Y: bessely,
    CylinderFamily.MODIFIED_I: besseli,
    CylinderFamily.MODIFIED_K: besselk,
}


def eval_cylinder(kind: CylinderKind, x: float) -> float:
    """Evaluate the cylinder function selected by *kind* at argument *x*."""
    return _FAMILY_EVAL[kind.family](kind.order, x)


def eval_cylinder_derivative(kind: CylinderKind, x: float) -> float:
    """First derivative via the exact neighbor-order recurrences.

    J_0' = -J_1, I_0' = I_1, K_0' = -K_1, Y_0' = -Y_1, and for m >= 1 the
    symmetric forms (C_{m-1} -/+ C_{m+1})/2 of each family.
    """
    m = kind.order
    f = _FAMILY_EVAL[kind.family]
    fam = kind.family
    if m == 0:
        if fam is CylinderFamily.BESSEL_J:
            return -f(1, x)
        if fam is CylinderFamily.NEUMANN_Y:
            return -f(1, x)
        if fam is CylinderFamily.MODIFIED_I:
            return f(1, x)
        return -f(1, x)
    lo = f(m - 1, x)
    hi = f(m + 1, x)
    if fam in (CylinderFamily.BESSEL_J, CylinderFamily.NEUMANN_Y):
        return 0.5 * (lo - hi)
    if fam is CylinderFamily.MODIFIED_I:
        return 0.5 * (lo + hi)
    return -0.5 * (lo + hi)


# ----------------------------------------------------------------------
# angular quadrature for J_0
# ----------------------------------------------------------------------

def sommerfeld_j0_components(kr: float, quadrature_points: int = 256) -> tuple[float, float]:
    """Real and imaginary parts of the closed-contour mean of e^(i kr sin(theta)).

    The periodic trapezoid with N points is exact up to the N-th Fourier
    mode, so for kr <= 20 and N >= 256 the real part reproduces J_0(kr) to
    rounding and the imaginary part cancels pairwise.
    """
    if quadrature_points < 16:
        raise ValueError("quadrature needs at least 16 points")
    kr = float(kr)
    if math.isnan(kr) or math.isinf(kr):
        raise ValueError(f"kr must be finite, got {kr!r}")
    n = int(quadrature_points)
    step = 2.0 * math.pi / n
    re = 0.0
    im = 0.0
    for j in range(n):
        a = kr * math.sin(j * step)
        re += math.cos(a)
        im += math.sin(a)
    return re / n, im / n


def sommerfeld_j0(kr: float, quadrature_points: int = 256) -> float:
    """J_0(kr) by direct angular quadrature of its plane-wave average."""
    re, im = sommerfeld_j0_components(kr, quadrature_points)
    if abs(im) > 1e-12:
        raise ArithmeticError(f"imaginary part failed to cancel: {im!r}")
    return re
