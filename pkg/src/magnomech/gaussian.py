"""Covariance-matrix algebra for Gaussian states.

Conventions: quadratures are ordered (X_1, Y_1, ..., X_n, Y_n), the
vacuum covariance matrix is I/2, and the symplectic form is
Omega = direct sum of [[0, 1], [-1, 0]].  With these choices the
uncertainty principle reads: every symplectic eigenvalue >= 1/2.
"""

import numpy as np

from .errors import DomainError, NumericalError

#: mode labels of the full 8x8 covariance matrix, 1-indexed
MODES = {"c": 1, "m1": 2, "m2": 3, "b": 4}
MODE_LABELS = ("c", "m1", "m2", "b")

PHYSICALITY_TOL = 1e-9
_PAIRING_TOL = 1e-9


def n_modes(C):
    C = np.asarray(C)
    if C.ndim != 2 or C.shape[0] != C.shape[1] or C.shape[0] % 2:
        raise DomainError(f"covariance matrix must be square of even size, got {C.shape}")
    return C.shape[0] // 2


def mode_indices(selection, total):
    """Normalize a mode selection (1-based indices or labels) and validate it."""
    idx = []
    for m in selection:
        if isinstance(m, str):
            if m not in MODES:
                raise DomainError(f"unknown mode label {m!r}")
            m = MODES[m]
        if not 1 <= m <= total:
            raise DomainError(f"mode index {m} out of range 1..{total}")
        idx.append(int(m))
    if not 1 <= len(idx) <= 3:
        raise DomainError("selection must contain 1 to 3 modes")
    if len(set(idx)) != len(idx):
        raise DomainError("selection must not repeat modes")
    return idx


def reduce(C, selection):
    """Principal submatrix of the selected modes, in selection order."""
    C = np.asarray(C)
    total = n_modes(C)
    rows = [r for m in mode_indices(selection, total)
            for r in (2 * m - 2, 2 * m - 1)]
    return C[np.ix_(rows, rows)]


def partial_transpose(C, flip_mode=1):
    """Momentum-sign flip of one mode at the covariance-matrix level.

    Equivalent to K C K with K = identity except -1 at the flipped
    mode's momentum quadrature; an exact involution.
    """
    C = np.asarray(C)
    total = n_modes(C)
    if isinstance(flip_mode, str):
        flip_mode = MODES.get(flip_mode)
    if flip_mode is None or not 1 <= flip_mode <= total:
        raise DomainError(f"flip_mode out of range 1..{total}")
    signs = np.ones(2 * total)
    signs[2 * flip_mode - 1] = -1.0
    return C * np.outer(signs, signs)


def symplectic_form(n):
    """Omega = direct sum of n blocks [[0, 1], [-1, 0]]."""
    return np.kron(np.eye(n), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def symplectic_eigenvalues(C):
    """Moduli of the paired eigenvalues of i*Omega*C, sorted ascending.

    For an n-mode covariance matrix the 2n eigenvalues of i*Omega*C come
    in +-nu pairs; the n moduli are returned.  This equals the spectrum
    of |direct_sum(-sigma_y) C| since -sigma_y = i*[[0,1],[-1,0]].
    """
    C = np.asarray(C, dtype=float)
    n = n_modes(C)
    try:
        eigs = np.linalg.eigvals(1j * symplectic_form(n) @ C)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"symplectic eigendecomposition failed: {exc}") from exc
    mods = np.sort(np.abs(eigs))
    scale = max(np.abs(C).max(), 1.0)
    if np.any(np.abs(mods[0::2] - mods[1::2]) > _PAIRING_TOL * scale):
        raise NumericalError(
            "eigenvalues of i*Omega*C do not pair up; matrix is far from "
            "a valid covariance matrix")
    return mods[0::2]


def physicality_check(C):
    """True iff the minimum symplectic eigenvalue is >= 1/2 - 1e-9."""
    return bool(symplectic_eigenvalues(C).min() >= 0.5 - PHYSICALITY_TOL)
