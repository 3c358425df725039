"""Radial quantum mechanics of the attractive -1/(4 r^2) effective term.

A zero-angular-momentum free particle in two dimensions feels an inverse-
square attraction of purely quantum origin. This package evaluates the
cylinder special functions from scratch, builds the effective potentials
in any dimension, integrates the radial equation, measures node bunching
statistics, and solves the contact-potential bound states whose density
rings around the attracting point. Units are hbar = M = 1 throughout.
"""

from .boundstate import (
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
from .nodes import (
    BracketingError,
    BunchingVerdict,
    NodeDensityReport,
    ZeroTable,
    bunching_verdict,
    find_zeros,
    node_density,
    refine_zero,
)
from .potentials import (
    UNITS,
    EffectivePotentialSpec,
    PotentialFamily,
    SignClass,
    classify_potential,
    eval_potential,
    quantum_square_2d,
)
from .quadrature import (
    QuadratureError,
    QuadratureResult,
    gauss_kronrod_15,
    integrate_adaptive,
)
from .radial import (
    Direction,
    EnergySign,
    RadialGrid,
    RadialWave,
    SolutionFamily,
    analytic_radial,
    assemble_phi2,
    default_grid,
    energy_from_wavenumber,
    integrate_radial,
    laplacian_reduction_check,
    ode_residual,
    polar_mode_residual,
    wavenumber_from_energy,
)
from .specfun import (
    CylinderFamily,
    CylinderKind,
    besseli,
    besselj,
    besselk,
    bessely,
    eval_cylinder,
    eval_cylinder_derivative,
    sommerfeld_j0,
    sommerfeld_j0_components,
)
from .verify import SuiteResult, run_all

__version__ = "0.1.0"

__all__ = [
    "BracketingError",
    "BunchingVerdict",
    "CylinderFamily",
    "CylinderKind",
    "DeltaBoundState",
    "DeltaCoupling2D",
    "DensityForm",
    "Direction",
    "EffectivePotentialSpec",
    "EnergySign",
    "NodeDensityReport",
    "PotentialFamily",
    "ProbabilityDensity",
    "QuadratureError",
    "QuadratureResult",
    "RadialGrid",
    "RadialWave",
    "SignClass",
    "SolutionFamily",
    "SuiteResult",
    "UNITS",
    "ZeroTable",
    "analytic_radial",
    "assemble_phi2",
    "besseli",
    "besselj",
    "besselk",
    "bessely",
    "bunching_verdict",
    "classify_potential",
    "coupling_from_k",
    "coupling_residual",
    "cutoff_integral",
    "default_grid",
    "density",
    "density_maximum",
    "density_profile",
    "energy_from_wavenumber",
    "eval_cylinder",
    "eval_cylinder_derivative",
    "eval_potential",
    "find_zeros",
    "gauss_kronrod_15",
    "integrate_adaptive",
    "integrate_radial",
    "k_from_coupling",
    "laplacian_reduction_check",
    "node_density",
    "normalize_check",
    "ode_residual",
    "one_three_d_bound_energy",
    "phi_line",
    "phi_point",
    "polar_mode_residual",
    "quantum_square_2d",
    "refine_zero",
    "ring_peak_parameter",
    "run_all",
    "sommerfeld_j0",
    "sommerfeld_j0_components",
    "wavenumber_from_energy",
    "__version__",
]
