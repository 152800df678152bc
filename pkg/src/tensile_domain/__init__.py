"""Tensile, wrinkled and slack states of voltage-activated elastomer membranes."""

from .domain import (
    CriticalPoint,
    DomainBoundary,
    asymptote,
    boundary,
    contains,
    critical_activation,
    diagonal_activation,
    natural_width,
    vertices,
)
from .errors import (
    DegenerateMaterial,
    InvalidLoad,
    InvalidState,
    MaterialEvaluationError,
    NotAvailable,
    SolverError,
    TensileDomainError,
    UnboundedError,
)
from .kernels import BACKEND
from .material import MaterialModel, generic, mooney_rivlin, neo_hookean, shear_modulus
from .scenarios import (
    EquilibriumBranch,
    PrestretchSolution,
    free_actuation,
    max_activation_for_prestretch,
    optimal_prestretch,
    prestretched_actuation,
    pull_in,
)
from .stress import (
    ElectricLoad,
    PlaneStress,
    Regime,
    StretchState,
    activation_parameter,
    classify,
    plane_stress,
    reduced_energy,
    relaxed_stress,
)

__version__ = "0.1.0"
