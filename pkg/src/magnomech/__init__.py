"""Steady-state Gaussian entanglement in a four-mode cavity magnomechanical
system with a Barnett frequency shift on the driven magnon mode.

The pipeline: physical parameters -> semiclassical steady state and
linearized drift/diffusion matrices -> Lyapunov covariance matrix ->
entanglement measures (logarithmic negativity, residual contangle),
Wigner functions and bidirectional contrast ratios.
"""

__version__ = "0.1.0"

from .errors import (AccuracyError, ConfigError, ConvergenceError, DomainError,
                     MagnomechError, NumericalError, OracleError,
                     SingularConfigurationError, StabilityError)
from .model import (Detunings, PhysicalParams, StabilityReport, SteadyState,
                    build_diffusion, build_drift, detunings, is_stable,
                    rabi_frequency, steady_state, steady_state_oracle,
                    thermal_occupation)
from .lyapunov import lyapunov_integral_oracle, lyapunov_residual, solve_lyapunov
from .gaussian import (MODE_LABELS, MODES, partial_transpose,
                       physicality_check, reduce, symplectic_eigenvalues,
                       symplectic_form)
from .measures import (BipartiteResult, TripartiteResult, contrast_ratio,
                       log_negativity, min_residual_contangle,
                       one_vs_two_negativity, residual_contangle)
from .wigner import (ContourEllipse, WignerGrid, contour_ellipse,
                     quadrature_squeezing, wigner_grid, wigner_value)
from .sweep import (Provenance, SweepResult, SweepSpec, apply_sweep_value,
                    run_sweep, solve_covariance)
from .presets import FIGURE_IDS, figure_preset, table1_params, table1_provenance
from .config import ParsedConfig, parse_config

__all__ = [
    "AccuracyError", "BipartiteResult", "ConfigError", "ContourEllipse",
    "ConvergenceError", "Detunings", "DomainError", "FIGURE_IDS",
    "MODES", "MODE_LABELS", "MagnomechError", "NumericalError", "OracleError",
    "ParsedConfig", "PhysicalParams", "Provenance", "SingularConfigurationError",
    "StabilityError", "StabilityReport", "SteadyState", "SweepResult",
    "SweepSpec", "TripartiteResult", "WignerGrid", "apply_sweep_value",
    "build_diffusion", "build_drift", "contour_ellipse", "contrast_ratio",
    "detunings", "figure_preset", "is_stable", "log_negativity",
    "lyapunov_integral_oracle", "lyapunov_residual", "min_residual_contangle",
    "one_vs_two_negativity", "parse_config", "partial_transpose",
    "physicality_check", "quadrature_squeezing", "rabi_frequency", "reduce",
    "residual_contangle", "run_sweep", "solve_covariance", "solve_lyapunov",
    "steady_state", "steady_state_oracle", "symplectic_eigenvalues",
    "symplectic_form", "table1_params", "table1_provenance",
    "thermal_occupation", "wigner_grid", "wigner_value",
]
