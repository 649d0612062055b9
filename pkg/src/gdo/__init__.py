"""Generalized (1+1)-D Dirac oscillator with complex couplings.

Closed-form spectra and bound states for the complexified Morse and shifted
cotangent families, conjugation-shift (pseudo-Hermiticity) checks, rotating
and anti-rotating two-level model assemblies, and self-contained eigensolver
oracles to validate all of it numerically.
"""

from .errors import (
    BranchError,
    ConfigError,
    ConvergenceError,
    DegenerateRecurrenceError,
    DimensionError,
    DomainError,
    GdoError,
    LevelOutOfRangeError,
    ParameterError,
    PoleError,
    SingularPivotError,
    UnsupportedError,
)
from .interactions import (
    ConditionReport,
    CotInteraction,
    CustomInteraction,
    DEFAULT_CONSTANTS,
    Grid,
    InteractionSpec,
    LinearInteraction,
    MorseInteraction,
    PhysicalConstants,
    check_pseudo_hermiticity_condition,
    default_condition_grid,
    eval_f,
    eval_f_prime,
    hermitian_equivalent_interaction,
    metric_theta,
    negated,
)
from .operators import (
    EffectivePotentialSample,
    OperatorMatrix,
    assemble_dirac,
    assemble_hermitian_equivalent,
    assemble_ladder,
    assemble_schrodinger,
    closed_form_potentials,
    effective_potentials,
    factorization_check,
    momentum_operator,
)
from .polynomials import jacobi, jacobi_series, laguerre, laguerre_series
from .eigensolve import (
    EigenResult,
    inverse_iteration,
    rayleigh_quotient,
    symtridiag_eigenvalues,
)
from .spectra import (
    SpectralLine,
    SpinorCoefficients,
    SpinorSample,
    UNBOUNDED,
    analytic_phi,
    analytic_spinor,
    bound_state_count,
    dirac_spectrum,
    epsilon_minus,
    epsilon_plus,
    spinor_coefficients,
)
from .models import (
    GroundStateReport,
    ModelSpec,
    assemble_model,
    ground_state_structure,
    oscillator_preset,
    spin_flip,
)
from .reports import CheckResult, VerificationReport
from .config import RunConfig, Tolerances, dumps_canonical, load_config
from .verify import contour_grid, numeric_epsilons, real_line_probe, spectrum_rows, verify_all

__version__ = "0.1.0"
