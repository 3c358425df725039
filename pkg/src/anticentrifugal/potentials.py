"""Effective radial potentials of inverse-square form.

After separating angular variables and rescaling the radial wavefunction so
that the first-derivative term drops out, every free Schroedinger problem in
N spatial dimensions leaves a one-dimensional problem with an effective
potential

    V_eff(r) = strength / r**2

in units hbar = M = 1 (so energies carry a factor hbar^2 / (2 M length^2)).
The strength depends only on the dimension and the angular momentum, and its
sign decides whether the term pushes probability outward or pulls it inward.
The notable member of the family is the planar zero-angular-momentum case,
whose strength is -1/4: an attractive term of purely quantum origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, unique
from fractions import Fraction
from typing import ClassVar

import numpy as np

UNITS = "hbar = M = 1; V(r) in units hbar^2 / (2 M length^2)"


@unique
class PotentialFamily(Enum):
    """Which inverse-square coefficient to use."""

    PLANAR_WAVE = "planar"            # 2D, integer angular momentum m
    SPATIAL_WAVE = "spatial"          # 3D, integer angular momentum l
    ZERO_MOMENTUM_NDIM = "ndim"       # N dimensions, zero angular momentum
    CLASSICAL = "classical"           # classical centrifugal barrier L^2/r^2
    QUANTUM_ANTICENTRIFUGAL = "quantum-anti"  # the bare -1/(4 r^2) term


@unique
class SignClass(Enum):
    ATTRACTIVE = "attractive"
    REPULSIVE = "repulsive"
    VANISHING = "vanishing"


def quantum_square_2d(m: int) -> float:
    """Coefficient of 1/r^2 for the planar mode of angular momentum m.

    The centrifugal number is m**2 - 1/4 rather than the classical m**2:
    the shift comes from removing the first-derivative term of the polar
    Laplacian, and for m = 0 it leaves a binding coefficient of -1/4.
    """
    if not isinstance(m, int) or isinstance(m, bool):
        raise TypeError(f"angular momentum must be an int, got {m!r}")
    if m < 0:
        raise ValueError(f"angular momentum must be non-negative, got {m}")
    return m * m - 0.25


@dataclass(frozen=True)
class EffectivePotentialSpec:
    """Parameters selecting one member of the inverse-square family.

    Exactly the fields relevant to the chosen family are read:
    ``angular_momentum`` for the planar and spatial waves,
    ``n_dim`` for the zero-angular-momentum N-dimensional case and
    ``classical_l_squared`` for the classical barrier.
    """

    family: PotentialFamily
    angular_momentum: int = 0
    n_dim: int = 2
    classical_l_squared: float = 0.0

    units: ClassVar[str] = UNITS

    def __post_init__(self) -> None:
        if not isinstance(self.family, PotentialFamily):
            raise TypeError(f"family must be a PotentialFamily, got {self.family!r}")
        m = self.angular_momentum
        if not isinstance(m, int) or isinstance(m, bool):
            raise TypeError(f"angular_momentum must be an int, got {m!r}")
        if m < 0:
            raise ValueError(f"angular_momentum must be non-negative, got {m}")
        n = self.n_dim
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError(f"n_dim must be an int, got {n!r}")
        if n < 1:
            raise ValueError(f"n_dim must be at least 1, got {n}")
        l2 = self.classical_l_squared
        if not (isinstance(l2, (int, float)) and math.isfinite(l2)):
            raise ValueError(f"classical_l_squared must be finite, got {l2!r}")
        if l2 < 0:
            raise ValueError(f"classical_l_squared must be non-negative, got {l2}")

    def strength_quarters(self) -> Fraction:
        """Exact coefficient of 1/r^2, returned as a fraction.

        Integer arithmetic here keeps the sign classification exact; the
        classical case is the only one with a free real parameter.
        """
        if self.family is PotentialFamily.PLANAR_WAVE:
            return Fraction(4 * self.angular_momentum**2 - 1, 4)
        if self.family is PotentialFamily.SPATIAL_WAVE:
            return Fraction(self.angular_momentum * (self.angular_momentum + 1))
        if self.family is PotentialFamily.ZERO_MOMENTUM_NDIM:
            return Fraction((self.n_dim - 1) * (self.n_dim - 3), 4)
        if self.family is PotentialFamily.CLASSICAL:
            return Fraction(self.classical_l_squared)
        return Fraction(-1, 4)

    @property
    def strength(self) -> float:
        """Coefficient of 1/r^2 as a float."""
        return float(self.strength_quarters())


def eval_potential(spec: EffectivePotentialSpec, r):
    """Evaluate V_eff(r) = strength / r^2 at positive radii.

    Accepts a scalar or an array; the return type matches. Radii must be
    strictly positive and finite.
    """
    coeff = spec.strength
    arr = np.asarray(r, dtype=float)
    if arr.ndim == 0:
        rv = float(arr)
        if not (math.isfinite(rv) and rv > 0.0):
            raise ValueError(f"radius must be positive and finite, got {rv!r}")
        return coeff / (rv * rv)
    if arr.size and (not np.all(np.isfinite(arr)) or not np.all(arr > 0.0)):
        raise ValueError("all radii must be positive and finite")
    return coeff / (arr * arr)


def classify_potential(spec: EffectivePotentialSpec) -> SignClass:
    """Attractive, repulsive or vanishing, decided by the exact strength."""
    q = spec.strength_quarters()
    if q < 0:
        return SignClass.ATTRACTIVE
    if q > 0:
        return SignClass.REPULSIVE
    return SignClass.VANISHING
