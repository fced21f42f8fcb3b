"""Gaussian Wigner functions on quadrature grids.

The fluctuation state of every mode is a zero-mean Gaussian, so its
Wigner function is W(v) = exp(-v^T C^{-1} v / 2) / ((2 pi)^n sqrt(det C)).
Grids are centered at zero (the fluctuation picture); the 1/e contour of
a single-mode W is the ellipse v^T C^{-1} v = 2, available analytically
from the eigendecomposition of C.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularConfigurationError
from .gaussian import n_modes, physicality_check

SQUEEZING_TOL = 1e-9


@dataclass(frozen=True)
class ContourEllipse:
    """1/e contour of a single-mode Wigner function.

    ``semi_axis_a`` lies along the direction at angle ``theta`` (radians,
    in [0, pi)), the most-squeezed principal axis; ``semi_axis_b`` is
    perpendicular.  The enclosed area equals 2 pi sqrt(det C).
    """

    semi_axis_a: float
    semi_axis_b: float
    theta: float

    @property
    def area(self):
        return math.pi * self.semi_axis_a * self.semi_axis_b


@dataclass(frozen=True)
class WignerGrid:
    """Single-mode Wigner function sampled on a square grid."""

    mode: str
    x: np.ndarray
    p: np.ndarray
    W: np.ndarray
    contour: ContourEllipse
    w_max: float

    def normalization(self):
        """Trapezoidal integral of the grid; 1 to within 1e-3 at >= 5 sigma."""
        return float(np.trapezoid(np.trapezoid(self.W, self.p, axis=1), self.x))


def wigner_value(C, point):
    """Wigner density of an n-mode zero-mean Gaussian state at one point."""
    C = np.asarray(C, dtype=float)
    n = n_modes(C)
    v = np.asarray(point, dtype=float)
    if v.shape != (2 * n,):
        raise DomainError(f"point must have length {2 * n}, got {v.shape}")
    det = np.linalg.det(C)
    if det <= 0:
        raise SingularConfigurationError(
            f"covariance matrix is singular or indefinite (det = {det:.3e})")
    quad = float(v @ np.linalg.solve(C, v))
    return math.exp(-0.5 * quad) / ((2 * math.pi) ** n * math.sqrt(det))


def contour_ellipse(C2):
    """Analytic 1/e contour of a single-mode Gaussian Wigner function.

    W drops to W_max/e on v^T C^{-1} v = 2, i.e. the ellipse with
    semi-axes sqrt(2 mu_i) along the eigenvectors of C.
    """
    mu, vecs = np.linalg.eigh(np.asarray(C2, dtype=float))
    if mu[0] <= 0:
        raise SingularConfigurationError("covariance matrix is not positive definite")
    theta = math.atan2(vecs[1, 0], vecs[0, 0]) % math.pi
    return ContourEllipse(math.sqrt(2 * mu[0]), math.sqrt(2 * mu[1]), theta)


def wigner_grid(C2, half_range_sigmas=5.0, resolution=201, mode="1"):
    """Evaluate a single-mode Wigner function on a square quadrature grid.

    The grid spans +- half_range_sigmas * sqrt(max eigenvalue of C2) on
    both axes.  Defaults (5 sigma, 201 points) keep the trapezoidal
    normalization within 1e-3 of unity.
    """
    C2 = np.asarray(C2, dtype=float)
    if n_modes(C2) != 1:
        raise DomainError("wigner_grid expects a single-mode (2x2) matrix")
    if resolution < 2 or half_range_sigmas <= 0:
        raise DomainError("grid needs resolution >= 2 and positive range")
    det = np.linalg.det(C2)
    if det <= 0:
        raise SingularConfigurationError(
            f"covariance matrix is singular or indefinite (det = {det:.3e})")

    half = half_range_sigmas * math.sqrt(np.linalg.eigvalsh(C2).max())
    x = np.linspace(-half, half, resolution)
    p = np.linspace(-half, half, resolution)
    inv = np.linalg.inv(C2)
    xg, pg = np.meshgrid(x, p, indexing="ij")
    quad = inv[0, 0] * xg**2 + 2 * inv[0, 1] * xg * pg + inv[1, 1] * pg**2
    W = np.exp(-0.5 * quad) / (2 * math.pi * math.sqrt(det))
    return WignerGrid(mode, x, p, W, contour_ellipse(C2), float(W.max()))


def quadrature_squeezing(C2):
    """Minimum quadrature variance and whether it beats the vacuum's 1/2."""
    C2 = np.asarray(C2, dtype=float)
    if n_modes(C2) != 1:
        raise DomainError("quadrature_squeezing expects a single-mode matrix")
    if not physicality_check(C2):
        raise DomainError("input covariance matrix is unphysical")
    v_min = float(np.linalg.eigvalsh(C2)[0])
    return v_min, v_min < 0.5 - SQUEEZING_TOL


def grid_csv(grid):
    """CSV text of a Wigner grid as x, p, W triplets (row-major over x)."""
    lines = [f"# wigner grid, mode {grid.mode}",
             f"# resolution {grid.x.size} x {grid.p.size}",
             "x,p,W"]
    for i, xv in enumerate(grid.x):
        for j, pv in enumerate(grid.p):
            lines.append(f"{float(xv)!r},{float(pv)!r},{float(grid.W[i, j])!r}")
    return "\n".join(lines) + "\n"


def contour_json(grid):
    """JSON text of the grid's 1/e contour parameters and diagnostics."""
    c = grid.contour
    payload = {
        "mode": grid.mode,
        "semi_axis_a": c.semi_axis_a,
        "semi_axis_b": c.semi_axis_b,
        "theta_rad": c.theta,
        "area": c.area,
        "w_max": grid.w_max,
        "normalization": grid.normalization(),
        "x_range": [float(grid.x[0]), float(grid.x[-1])],
        "p_range": [float(grid.p[0]), float(grid.p[-1])],
    }
    return json.dumps(payload, indent=2) + "\n"
