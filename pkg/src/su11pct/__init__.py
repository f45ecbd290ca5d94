"""Exactly solvable oscillator, Morse and Coulomb problems, their su(1,1)
ladder algebras and the point canonical transformations linking them, in
constant-mass and position-dependent-mass settings."""

__version__ = "0.1.0"

from .errors import (
    ConvergenceError,
    DomainError,
    NotApplicableError,
    ParameterError,
)
from .systems import (
    BoundState,
    CoulombSpec,
    MorseSpec,
    OscillatorSpec,
    bound_state,
    energy,
    mass_and_potential,
    member_coupling,
    spectrum_fixed_potential,
)
from .operators import (
    SmoothFunction,
    apply_hamiltonian,
    apply_pi,
    apply_pi_squared,
    eigen_residual,
)
from .measures import Measure, QuadratureRule, family_measure, inner_product, quadrature_rule
from .algebra import (
    DeltaSpectrum,
    GeneratorSet,
    UnirrepLabel,
    apply_generator,
    commutator_residuals,
    delta_eigenvalue,
    delta_spectrum,
    generator_set,
    ladder_coefficient,
    matrix_element_numeric,
    unirrep,
)
from .pct import MappingSpec, hierarchy, map_parameters, map_state, mapping
from .oracle import DiscreteHamiltonian, GridSpec, discretize, lowest_eigenvalues

__all__ = [
    "BoundState",
    "ConvergenceError",
    "CoulombSpec",
    "DeltaSpectrum",
    "DiscreteHamiltonian",
    "DomainError",
    "GeneratorSet",
    "GridSpec",
    "MappingSpec",
    "Measure",
    "MorseSpec",
    "NotApplicableError",
    "OscillatorSpec",
    "ParameterError",
    "QuadratureRule",
    "SmoothFunction",
    "UnirrepLabel",
    "apply_generator",
    "apply_hamiltonian",
    "apply_pi",
    "apply_pi_squared",
    "bound_state",
    "commutator_residuals",
    "delta_eigenvalue",
    "delta_spectrum",
    "discretize",
    "eigen_residual",
    "energy",
    "family_measure",
    "generator_set",
    "hierarchy",
    "inner_product",
    "ladder_coefficient",
    "lowest_eigenvalues",
    "map_parameters",
    "map_state",
    "mapping",
    "mass_and_potential",
    "matrix_element_numeric",
    "member_coupling",
    "quadrature_rule",
    "spectrum_fixed_potential",
    "unirrep",
]
