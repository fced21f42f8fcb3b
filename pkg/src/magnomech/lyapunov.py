"""Steady-state Lyapunov solver and its integral-form oracle.

The stationary covariance matrix C of a stable linear diffusion solves
A C + C A^T + F = 0.  The production path delegates to a Schur-based
dense solver; an independent quadrature of the integral representation
C = int_0^inf exp(A t) F exp(A^T t) dt backs it in the test suite.
"""

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.linalg import expm, solve_continuous_lyapunov

from .errors import AccuracyError, NumericalError, StabilityError
from .model import is_stable

RESIDUAL_BOUND = 1e-10

_QUAD_ORDER = 24
_MAX_DOUBLINGS = 128


def lyapunov_residual(A, C, F):
    """Max-norm residual ||A C + C A^T + F||_max."""
    A = np.asarray(A)
    C = np.asarray(C)
    F = np.asarray(F)
    if not (A.shape == C.shape == F.shape) or A.shape[0] != A.shape[1]:
        raise ValueError(
            f"dimension mismatch: A {A.shape}, C {C.shape}, F {F.shape}")
    return float(np.abs(A @ C + C @ A.T + F).max())


def solve_lyapunov(A, F):
    """Solve A C + C A^T + F = 0 for the symmetric covariance matrix C.

    Parameters
    ----------
    A : (2n, 2n) array
        Drift matrix; must be Hurwitz stable.
    F : (2n, 2n) array
        Symmetric positive semidefinite diffusion matrix.

    Returns
    -------
    C : (2n, 2n) ndarray
        Symmetrized solution with residual at most 1e-10 * ||F||_max.

    Raises
    ------
    StabilityError
        If A has an eigenvalue with non-negative real part (no solve is
        attempted).
    NumericalError
        If the solve succeeds formally but violates the residual bound;
        the message carries a condition estimate of the Lyapunov operator.
    """
    A = np.asarray(A, dtype=float)
    F = np.asarray(F, dtype=float)
    report = is_stable(A)
    if not report.stable:
        raise StabilityError(
            f"drift matrix is unstable (spectral abscissa {report.abscissa:.3e})")
    C = solve_continuous_lyapunov(A, -F)
    C = 0.5 * (C + C.T)
    f_scale = np.abs(F).max()
    residual = lyapunov_residual(A, C, F)
    if residual > RESIDUAL_BOUND * f_scale and f_scale > 0:
        n = A.shape[0]
        op = np.kron(np.eye(n), A) + np.kron(A, np.eye(n))
        raise NumericalError(
            f"Lyapunov residual {residual:.3e} exceeds "
            f"{RESIDUAL_BOUND:g} * ||F||_max = {RESIDUAL_BOUND * f_scale:.3e} "
            f"(operator condition ~ {np.linalg.cond(op):.3e})")
    return C


def lyapunov_integral_oracle(A, F, horizon=None, tol=1e-12):
    """Quadrature of C = int_0^inf exp(A t) F exp(A^T t) dt.

    A fixed-order Gauss-Legendre rule integrates one base panel of width
    1/||A||_2 (sub-radian phase, so the rule is exact to machine
    precision), and the identity
    int_0^{2T} = int_0^T + exp(A T) [int_0^T] exp(A^T T)
    doubles the horizon until the last doubling contributes less than
    ``tol`` of the accumulated Frobenius norm.  Test-only path.

    Parameters
    ----------
    horizon : float, optional
        Cap on the integration time.  If the tail estimate has not fallen
        below ``tol`` by then, an AccuracyError is raised.
    """
    A = np.asarray(A, dtype=float)
    F = np.asarray(F, dtype=float)
    report = is_stable(A)
    if not report.stable:
        raise StabilityError(
            f"integral representation diverges for unstable A "
            f"(abscissa {report.abscissa:.3e})")

    h = 1.0 / np.linalg.norm(A, 2)
    nodes, weights = leggauss(_QUAD_ORDER)
    C = np.zeros_like(F)
    for x, w in zip(nodes, weights):
        E = expm(A * (0.5 * h * (x + 1.0)))
        C += (0.5 * h * w) * (E @ F @ E.T)

    E_horizon = expm(A * h)
    t_covered = h
    for _ in range(_MAX_DOUBLINGS):
        tail = E_horizon @ C @ E_horizon.T
        C = C + tail
        t_covered *= 2.0
        if np.linalg.norm(tail, "fro") <= tol * np.linalg.norm(C, "fro"):
            return 0.5 * (C + C.T)
        if horizon is not None and t_covered >= horizon:
            raise AccuracyError(
                f"horizon {horizon:g} s too short: tail estimate "
                f"{np.linalg.norm(tail, 'fro'):.3e} has not reached "
                f"tol * ||C|| at t = {t_covered:.3e}")
        E_horizon = E_horizon @ E_horizon
    raise AccuracyError(
        f"no tail convergence after {_MAX_DOUBLINGS} horizon doublings")
