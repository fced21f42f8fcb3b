"""Physical model of the four-mode cavity magnomechanical system.

Maps a parameter set (cavity mode c, magnon modes m1/m2, phonon mode b)
to the linearized fluctuation dynamics: semiclassical steady state,
effective magnomechanical coupling, 8x8 drift and diffusion matrices and
a stability verdict.  Quadrature ordering throughout is
(X_c, Y_c, X_m1, Y_m1, X_m2, Y_m2, x, y) with vacuum variance 1/2.

All frequencies and rates are angular (rad/s); temperatures are kelvin.
"""

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np
from scipy.constants import hbar, k as k_B
from scipy.optimize import brentq

from .errors import (ConfigError, ConvergenceError, DomainError, NumericalError,
                     OracleError, SingularConfigurationError)

# gyromagnetic ratio of YIG, rad/s per tesla, and its spin density (1/m^3)
GYROMAGNETIC_RATIO = 2 * math.pi * 28e9
YIG_SPIN_DENSITY = 4.22e27

G_IMAG_WARN_RATIO = 1e-6


@dataclass(frozen=True)
class PhysicalParams:
    """One complete system configuration.

    Exactly one of ``drive_amplitude`` (Rabi frequency of the magnon-1
    drive) or ``G_direct`` (effective magnomechanical coupling magnitude,
    bypassing the semiclassical steady state) must be provided.
    ``delta_B`` is the signed Barnett shift of magnon 1; its sign encodes
    the drive direction along +/- z.
    """

    omega_c: float
    omega_m1: float
    omega_m2: float
    omega_b: float
    omega_drive: float
    delta_B: float
    kappa_c: float
    kappa_m1: float
    kappa_m2: float
    gamma_b: float
    g1: float
    g2: float
    J: float
    G0: float
    temperature: float
    drive_amplitude: float | None = None
    G_direct: float | None = None

    def __post_init__(self):
        for name in ("kappa_c", "kappa_m1", "kappa_m2", "gamma_b"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be strictly positive")
        if self.omega_b <= 0:
            raise ConfigError("omega_b must be strictly positive")
        if self.temperature < 0:
            raise ConfigError("temperature must be >= 0")
        if (self.drive_amplitude is None) == (self.G_direct is None):
            raise ConfigError(
                "exactly one of drive_amplitude or G_direct must be set")

    def with_changes(self, **kw):
        """Return a copy with the given fields replaced."""
        return replace(self, **kw)


@dataclass(frozen=True)
class Detunings:
    """Mode detunings from the drive, plus the coupling-shifted magnon-1 value."""

    delta_c: float
    delta_m1: float
    delta_m2: float
    delta_m1_tilde: float


@dataclass(frozen=True)
class SteadyState:
    """Semiclassical amplitudes and the effective magnomechanical coupling."""

    c_s: complex
    m1_s: complex
    m2_s: complex
    x_s: float
    y_s: float
    G_eff: complex


@dataclass(frozen=True)
class StabilityReport:
    """Verdict of the Hurwitz test on a drift matrix.

    ``abscissa`` is the largest eigenvalue real part; ``marginal`` flags
    an abscissa within +-epsilon of zero, epsilon = 1e-9 * max|A|.
    """

    stable: bool
    abscissa: float
    marginal: bool

    def __bool__(self):
        return self.stable


def thermal_occupation(omega, temperature):
    """Bose occupation 1/(exp(hbar*omega/(k_B*T)) - 1); 0 at T = 0.

    Parameters
    ----------
    omega : float
        Mode angular frequency, rad/s.  Must be > 0.
    temperature : float
        Bath temperature, kelvin.  Must be >= 0.
    """
    if omega <= 0:
        raise DomainError(f"thermal_occupation requires omega > 0, got {omega}")
    if temperature < 0:
        raise DomainError("temperature must be >= 0")
    if temperature == 0:
        return 0.0
    return 1.0 / math.expm1(hbar * omega / (k_B * temperature))


def detunings(params, x_s=0.0):
    """Detunings of c, m1, m2 from the drive; delta_m1_tilde includes G0*x_s."""
    d_c = params.omega_c - params.omega_drive
    d_m1 = params.omega_m1 - params.omega_drive
    d_m2 = params.omega_m2 - params.omega_drive
    return Detunings(d_c, d_m1, d_m2, d_m1 + params.G0 * x_s)


def rabi_frequency(drive_field, sphere_volume, spin_density=YIG_SPIN_DENSITY):
    """Drive Rabi frequency (sqrt(5 N)/4) * Gamma * B0 for N = rho * V spins.

    Optional converter; the core model consumes the Rabi frequency directly.
    """
    if drive_field < 0 or sphere_volume <= 0 or spin_density <= 0:
        raise DomainError("drive field must be >= 0 and volume/density > 0")
    n_spins = spin_density * sphere_volume
    return math.sqrt(5 * n_spins) / 4 * GYROMAGNETIC_RATIO * drive_field


def _amplitude_formulas(det, delta_B, g1, g2, J, psi):
    """Large-detuning closed forms for (c_s, m1_s, m2_s) at fixed x_s."""
    d1 = det.delta_m1_tilde + delta_B
    d2 = det.delta_m2
    dc = det.delta_c
    den_c = (dc * d1 * d2 - J**2 * dc - g1**2 * d2 - g2**2 * d1
             + 2 * J * g1 * g2)
    den_m1 = d2 * d1 - J**2
    if den_c == 0.0 or den_m1 == 0.0 or d2 == 0.0:
        raise SingularConfigurationError(
            "steady-state denominator vanished; shift the detunings")
    c_s = 1j * psi * (g1 * d2 - g2 * J) / den_c
    m1_s = -((g1 * d2 - g2 * J) * c_s + 1j * d2 * psi) / den_m1
    m2_s = -(g2 * c_s + J * m1_s) / d2
    return c_s, m1_s, m2_s


def steady_state(params, rel_tol=1e-12, max_iter=1000):
    """Self-consistent semiclassical steady state.

    In drive mode the closed-form amplitudes (valid for detunings much
    larger than the decay rates) are iterated with the mechanical
    displacement x_s = -(G0/omega_b)|m1_s|^2 feeding back into the
    magnon-1 detuning, until the relative change of |m1_s| drops below
    ``rel_tol``.  Under-relaxation (factor 0.5) kicks in if the x_s
    update starts oscillating.  In G_direct mode the amplitudes are zero
    and G_eff is taken verbatim.

    Returns
    -------
    SteadyState
        Amplitudes, x_s, y_s = 0 and G_eff = i*sqrt(2)*G0*m1_s.
    """
    if params.G_direct is not None:
        return SteadyState(0j, 0j, 0j, 0.0, 0.0, complex(params.G_direct))

    psi = params.drive_amplitude
    if psi == 0.0:
        return SteadyState(0j, 0j, 0j, 0.0, 0.0, 0j)

    x_s = 0.0
    prev_abs = None
    prev_delta = 0.0
    state = None
    for _ in range(max_iter):
        det = detunings(params, x_s)
        c_s, m1_s, m2_s = _amplitude_formulas(
            det, params.delta_B, params.g1, params.g2, params.J, psi)
        x_target = -(params.G0 / params.omega_b) * abs(m1_s) ** 2
        state = SteadyState(c_s, m1_s, m2_s, x_target, 0.0,
                            1j * math.sqrt(2) * params.G0 * m1_s)
        if prev_abs is not None:
            if abs(abs(m1_s) - prev_abs) <= rel_tol * abs(m1_s):
                return state
        prev_abs = abs(m1_s)
        delta = x_target - x_s
        if delta * prev_delta < 0:
            delta *= 0.5  # oscillation detected, under-relax
        prev_delta = delta
        x_s = x_s + delta
    raise ConvergenceError(
        f"steady_state did not converge in {max_iter} iterations", last=state)


def steady_state_oracle(params, xtol=1e-305, rtol=9e-16):
    """Exact steady state with decay retained; test-only cross-check.

    Solves the zero-derivative mean-field conditions of the full Langevin
    equations: at fixed x_s the three amplitudes satisfy a complex 3x3
    linear system, and x_s itself is the root of
    x_s + (G0/omega_b)|m1_s(x_s)|^2 = 0, found by bracketing bisection.
    """
    if params.drive_amplitude is None:
        raise OracleError("oracle requires the drive pathway (Rabi frequency)")
    psi = params.drive_amplitude
    if psi == 0.0:
        return SteadyState(0j, 0j, 0j, 0.0, 0.0, 0j)

    det0 = detunings(params)

    def amplitudes(x_s):
        d1 = det0.delta_m1 + params.G0 * x_s + params.delta_B
        mat = np.array([
            [1j * det0.delta_c + params.kappa_c, 1j * params.g1, 1j * params.g2],
            [1j * params.g1, 1j * d1 + params.kappa_m1, 1j * params.J],
            [1j * params.g2, 1j * params.J, 1j * det0.delta_m2 + params.kappa_m2],
        ])
        rhs = np.array([0.0, psi, 0.0], dtype=complex)
        try:
            return np.linalg.solve(mat, rhs)
        except np.linalg.LinAlgError as exc:
            raise OracleError(f"singular amplitude system: {exc}") from exc

    def objective(x_s):
        _, m1_s, _ = amplitudes(x_s)
        return x_s + (params.G0 / params.omega_b) * abs(m1_s) ** 2

    if params.G0 == 0.0:
        x_root = 0.0
    else:
        lo = -4.0 * (params.G0 / params.omega_b) * abs(amplitudes(0.0)[1]) ** 2 - 1.0
        for _ in range(80):
            if objective(lo) < 0:
                break
            lo *= 2.0
        else:
            raise OracleError("could not bracket the displacement root")
        try:
            x_root = brentq(objective, lo, 0.0, xtol=xtol, rtol=rtol)
        except (ValueError, RuntimeError) as exc:
            raise OracleError(f"displacement root-finding failed: {exc}") from exc

    c_s, m1_s, m2_s = amplitudes(x_root)
    return SteadyState(c_s, m1_s, m2_s, x_root, 0.0,
                       1j * math.sqrt(2) * params.G0 * m1_s)


def effective_coupling(ss):
    """Real coupling magnitude inserted into the drift matrix.

    G_eff is stored complex; only its real part enters the linearized
    dynamics.  A warning is emitted when the imaginary remainder exceeds
    1e-6 of the magnitude, i.e. when the purely-imaginary-amplitude
    approximation behind the closed forms is strained.
    """
    g = ss.G_eff
    mag = abs(g)
    if mag > 0 and abs(g.imag) > G_IMAG_WARN_RATIO * mag:
        warnings.warn(
            f"effective coupling is not real to {G_IMAG_WARN_RATIO:g} "
            f"(|Im G|/|G| = {abs(g.imag) / mag:.3e}); using Re(G) in the drift",
            stacklevel=3)
    return g.real


def build_drift(params, ss):
    """8x8 drift matrix of the linearized quadrature dynamics."""
    det = detunings(params, ss.x_s)
    d1 = det.delta_m1_tilde + params.delta_B
    d2 = det.delta_m2
    dc = det.delta_c
    g1, g2, J = params.g1, params.g2, params.J
    G = effective_coupling(ss)

    A = np.zeros((8, 8))
    A[0, 0] = -params.kappa_c
    A[0, 1] = dc
    A[0, 3] = g1
    A[0, 5] = g2
    A[1, 0] = -dc
    A[1, 1] = -params.kappa_c
    A[1, 2] = -g1
    A[1, 4] = -g2
    A[2, 1] = g1
    A[2, 2] = -params.kappa_m1
    A[2, 3] = d1
    A[2, 5] = J
    A[2, 6] = -G
    A[3, 0] = -g1
    A[3, 2] = -d1
    A[3, 3] = -params.kappa_m1
    A[3, 4] = -J
    A[4, 1] = g2
    A[4, 3] = J
    A[4, 4] = -params.kappa_m2
    A[4, 5] = d2
    A[5, 0] = -g2
    A[5, 2] = -J
    A[5, 4] = -d2
    A[5, 5] = -params.kappa_m2
    A[6, 7] = params.omega_b
    A[7, 3] = G
    A[7, 6] = -params.omega_b
    A[7, 7] = -params.gamma_b
    return A


def build_diffusion(params):
    """Diagonal 8x8 diffusion matrix of the stationary input noise."""
    n_c = thermal_occupation(params.omega_c, params.temperature)
    n_m1 = thermal_occupation(params.omega_m1, params.temperature)
    n_m2 = thermal_occupation(params.omega_m2, params.temperature)
    n_b = thermal_occupation(params.omega_b, params.temperature)
    return np.diag([
        params.kappa_c * (2 * n_c + 1),
        params.kappa_c * (2 * n_c + 1),
        params.kappa_m1 * (2 * n_m1 + 1),
        params.kappa_m1 * (2 * n_m1 + 1),
        params.kappa_m2 * (2 * n_m2 + 1),
        params.kappa_m2 * (2 * n_m2 + 1),
        0.0,
        params.gamma_b * (2 * n_b + 1),
    ])


def is_stable(A):
    """Hurwitz test: all drift eigenvalues must have negative real part."""
    try:
        eigs = np.linalg.eigvals(np.asarray(A, dtype=float))
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition failed: {exc}") from exc
    abscissa = float(eigs.real.max())
    eps = 1e-9 * np.abs(A).max()
    return StabilityReport(abscissa < 0.0, abscissa, abs(abscissa) < eps)
