import math

import numpy as np
import pytest

from magnomech import PhysicalParams

TWO_PI = 2 * math.pi


def tmsv(r):
    """Two-mode squeezed vacuum covariance matrix, vacuum variance 1/2."""
    ch, sh = math.cosh(2 * r) / 2, math.sinh(2 * r) / 2
    Z = np.diag([1.0, -1.0])
    return np.block([[ch * np.eye(2), sh * Z], [sh * Z, ch * np.eye(2)]])


def random_physical_cm(rng, n_modes):
    """Random valid covariance matrix: vacuum plus a PSD classical excess."""
    m = rng.standard_normal((2 * n_modes, 2 * n_modes))
    return 0.5 * np.eye(2 * n_modes) + 0.25 * (m @ m.T)


def random_stable_system(rng, n=8, margin=0.5):
    """Random Hurwitz-stable drift matrix and PSD diagonal diffusion."""
    A = rng.standard_normal((n, n))
    A -= (np.linalg.eigvals(A).real.max() + margin) * np.eye(n)
    F = np.diag(rng.uniform(0.1, 2.0, n))
    return A, F


def driven_params(**overrides):
    """Generic drive-pathway parameters in the large-detuning regime."""
    wb = TWO_PI * 1e7
    base = dict(
        omega_c=TWO_PI * 1e10,
        omega_m1=TWO_PI * 1e10 + 2 * wb,
        omega_m2=TWO_PI * 1e10,
        omega_b=wb,
        omega_drive=TWO_PI * 1e10 + wb,
        delta_B=0.2 * wb,
        kappa_c=TWO_PI * 1e3,
        kappa_m1=TWO_PI * 1e3,
        kappa_m2=TWO_PI * 1e3,
        gamma_b=TWO_PI * 1e2,
        g1=TWO_PI * 3.2e6,
        g2=TWO_PI * 2.6e6,
        J=TWO_PI * 3.2e6,
        G0=TWO_PI * 1.0,
        temperature=0.01,
        drive_amplitude=2.4e14,
    )
    base.update(overrides)
    return PhysicalParams(**base)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
