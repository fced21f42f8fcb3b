import numpy as np
import pytest

from magnomech import (AccuracyError, StabilityError, lyapunov_integral_oracle,
                       lyapunov_residual, solve_lyapunov)
from conftest import random_stable_system


class TestSolveLyapunov:
    def test_scalar_diagonal_closed_form(self):
        # A = -k I, F = f I  =>  C = f/(2k) I
        k, f = 3.0, 5.0
        C = solve_lyapunov(-k * np.eye(8), f * np.eye(8))
        assert np.allclose(C, f / (2 * k) * np.eye(8), rtol=1e-13, atol=1e-13)

    def test_rotation_decay_block_gives_thermal_variance(self):
        # A + A^T = -2k I makes the identity ansatz exact: C = (N + 1/2) I
        k, delta, N = 2.0, 7.0, 0.3
        A = np.array([[-k, delta], [-delta, -k]])
        F = k * (2 * N + 1) * np.eye(2)
        C = solve_lyapunov(A, F)
        assert np.allclose(C, (N + 0.5) * np.eye(2), rtol=1e-13, atol=1e-13)

    def test_output_is_symmetric(self, rng):
        for _ in range(10):
            A, F = random_stable_system(rng)
            C = solve_lyapunov(A, F)
            assert np.abs(C - C.T).max() <= 1e-12

    def test_residual_bound_on_random_systems(self, rng):
        for _ in range(20):
            A, F = random_stable_system(rng)
            C = solve_lyapunov(A, F)
            assert lyapunov_residual(A, C, F) <= 1e-10 * np.abs(F).max()

    def test_unstable_drift_refused(self):
        with pytest.raises(StabilityError):
            solve_lyapunov(np.eye(8), np.eye(8))


class TestIntegralOracle:
    def test_scalar_diagonal_closed_form(self):
        k, f = 3.0, 5.0
        C = lyapunov_integral_oracle(-k * np.eye(8), f * np.eye(8), tol=1e-13)
        assert np.allclose(C, f / (2 * k) * np.eye(8), rtol=1e-10)

    def test_zero_diffusion_gives_zero(self, rng):
        A, _ = random_stable_system(rng)
        C = lyapunov_integral_oracle(A, np.zeros((8, 8)))
        assert np.array_equal(C, np.zeros((8, 8)))

    def test_agrees_with_solver(self, rng):
        for _ in range(25):
            A, F = random_stable_system(rng)
            C_solve = solve_lyapunov(A, F)
            C_int = lyapunov_integral_oracle(A, F, tol=1e-12)
            err = (np.linalg.norm(C_solve - C_int, "fro")
                   / np.linalg.norm(C_solve, "fro"))
            assert err <= 1e-6

    def test_agrees_on_stiff_preset(self):
        from magnomech import solve_covariance, table1_params
        from magnomech.model import build_diffusion, build_drift, steady_state
        p = table1_params()
        ss = steady_state(p)
        A, F = build_drift(p, ss), build_diffusion(p)
        C_solve = solve_lyapunov(A, F)
        C_int = lyapunov_integral_oracle(A, F, tol=1e-12)
        err = (np.linalg.norm(C_solve - C_int, "fro")
               / np.linalg.norm(C_solve, "fro"))
        assert err <= 1e-6

    def test_short_horizon_raises(self, rng):
        A, F = random_stable_system(rng, margin=0.05)  # slow decay
        with pytest.raises(AccuracyError):
            lyapunov_integral_oracle(A, F, horizon=1e-3, tol=1e-12)

    def test_unstable_drift_refused(self):
        with pytest.raises(StabilityError):
            lyapunov_integral_oracle(np.eye(8), np.eye(8))


class TestResidual:
    def test_exact_solution_residual_is_tiny(self, rng):
        A, F = random_stable_system(rng)
        C = solve_lyapunov(A, F)
        assert lyapunov_residual(A, C, F) <= 1e-10 * np.abs(F).max()

    def test_zero_candidate_returns_f_norm(self, rng):
        A, F = random_stable_system(rng)
        assert lyapunov_residual(A, np.zeros((8, 8)), F) == np.abs(F).max()

    def test_linearity_in_perturbation(self, rng):
        A, F = random_stable_system(rng)
        C = solve_lyapunov(A, F)
        r1 = lyapunov_residual(A, C + 1e-6 * np.eye(8), F)
        r2 = lyapunov_residual(A, C + 2e-6 * np.eye(8), F)
        assert r2 == pytest.approx(2 * r1, rel=1e-6)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            lyapunov_residual(np.eye(4), np.eye(8), np.eye(8))
