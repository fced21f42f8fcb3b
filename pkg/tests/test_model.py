import math

import numpy as np
import pytest
from scipy.constants import hbar, k as k_B

from magnomech import (ConfigError, ConvergenceError, DomainError,
                       PhysicalParams, SingularConfigurationError,
                       build_diffusion, build_drift, detunings, is_stable,
                       rabi_frequency, steady_state, steady_state_oracle,
                       thermal_occupation)
from conftest import TWO_PI, driven_params

# structurally nonzero positions of the 8x8 drift matrix (0-indexed)
DRIFT_SUPPORT = {
    (0, 0), (0, 1), (0, 3), (0, 5),
    (1, 0), (1, 1), (1, 2), (1, 4),
    (2, 1), (2, 2), (2, 3), (2, 5), (2, 6),
    (3, 0), (3, 2), (3, 3), (3, 4),
    (4, 1), (4, 3), (4, 4), (4, 5),
    (5, 0), (5, 2), (5, 4), (5, 5),
    (6, 7),
    (7, 3), (7, 6), (7, 7),
}


class TestThermalOccupation:
    def test_zero_temperature_is_exactly_zero(self):
        assert thermal_occupation(TWO_PI * 123.0, 0.0) == 0.0

    def test_ln2_crossing_gives_unit_occupation(self):
        # hbar*omega = k_B*T*ln 2 forces exp(.) = 2, hence N = 1
        T = 0.25
        omega = k_B * T * math.log(2) / hbar
        assert thermal_occupation(omega, T) == pytest.approx(1.0, rel=1e-12)

    def test_frozen_bose_value(self):
        # independent evaluation of the Bose formula at 2 pi * 1e10 rad/s, 10 mK
        x = hbar * (TWO_PI * 1e10) / (k_B * 0.01)
        expected = 1.0 / (math.exp(x) - 1.0)
        got = thermal_occupation(TWO_PI * 1e10, 0.01)
        assert got == pytest.approx(expected, rel=1e-12)
        assert got == pytest.approx(1.4359924589903149e-21, rel=1e-12)

    @pytest.mark.parametrize("omega", [0.0, -1.0])
    def test_nonpositive_frequency_rejected(self, omega):
        with pytest.raises(DomainError):
            thermal_occupation(omega, 0.1)


class TestParamsAndDetunings:
    def test_exactly_one_drive_pathway(self):
        with pytest.raises(ConfigError):
            driven_params(G_direct=TWO_PI * 1e6)  # both set
        with pytest.raises(ConfigError):
            driven_params(drive_amplitude=None)  # neither set

    @pytest.mark.parametrize("field", ["kappa_c", "kappa_m1", "kappa_m2", "gamma_b"])
    def test_rates_strictly_positive(self, field):
        with pytest.raises(ConfigError):
            driven_params(**{field: 0.0})

    def test_detuning_arithmetic_is_exact(self):
        p = driven_params()
        d = detunings(p)
        assert d.delta_c == p.omega_c - p.omega_drive
        assert d.delta_m1 == p.omega_m1 - p.omega_drive
        assert d.delta_m2 == p.omega_m2 - p.omega_drive
        assert d.delta_m1_tilde == d.delta_m1  # x_s = 0

    def test_rabi_helper_matches_formula(self):
        n_spins = 4.22e27 * 1e-9
        expected = math.sqrt(5 * n_spins) / 4 * (TWO_PI * 28e9) * 1e-4
        assert rabi_frequency(1e-4, 1e-9) == pytest.approx(expected, rel=1e-12)


class TestSteadyState:
    def test_undriven_system_is_exactly_zero(self):
        ss = steady_state(driven_params(drive_amplitude=0.0))
        assert ss.c_s == 0 and ss.m1_s == 0 and ss.m2_s == 0
        assert ss.x_s == 0.0 and ss.y_s == 0.0 and ss.G_eff == 0

    def test_direct_coupling_bypass(self):
        # Table-style configuration: G supplied directly
        p = driven_params(drive_amplitude=None, G_direct=TWO_PI * 4.8e6)
        ss = steady_state(p)
        assert abs(ss.G_eff) == TWO_PI * 4.8e6
        assert ss.m1_s == 0 and ss.x_s == 0.0

    def test_fixed_point_reproduces_itself(self):
        # re-inserting the returned amplitudes into the closed forms moves
        # them by less than 1e-10 relative
        from magnomech.model import _amplitude_formulas
        p = driven_params()
        ss = steady_state(p)
        det = detunings(p, ss.x_s)
        c2, m12, m22 = _amplitude_formulas(det, p.delta_B, p.g1, p.g2, p.J,
                                           p.drive_amplitude)
        assert abs(c2 - ss.c_s) <= 1e-10 * abs(ss.c_s)
        assert abs(m12 - ss.m1_s) <= 1e-10 * abs(ss.m1_s)
        assert abs(m22 - ss.m2_s) <= 1e-10 * abs(ss.m2_s)
        assert ss.x_s == pytest.approx(-(p.G0 / p.omega_b) * abs(ss.m1_s) ** 2,
                                       rel=1e-12)

    def test_amplitudes_purely_imaginary(self):
        ss = steady_state(driven_params())
        assert abs(ss.c_s.real) <= 1e-12 * abs(ss.c_s)
        assert abs(ss.m1_s.real) <= 1e-12 * abs(ss.m1_s)
        assert abs(ss.G_eff.imag) <= 1e-12 * abs(ss.G_eff)

    def test_matches_oracle_in_large_detuning_regime(self):
        p = driven_params()  # kappa / delta ~ 1e-4
        ss = steady_state(p)
        oracle = steady_state_oracle(p)
        assert abs(ss.m1_s) == pytest.approx(abs(oracle.m1_s), rel=1e-3)
        assert ss.x_s == pytest.approx(oracle.x_s, rel=1e-3)

    def test_zero_denominator_raises(self):
        p = driven_params(omega_m2=driven_params().omega_drive, J=0.0)
        with pytest.raises(SingularConfigurationError):
            steady_state(p)  # delta_m2 = 0 with J = 0

    def test_nonconvergence_carries_last_iterate(self):
        with pytest.raises(ConvergenceError) as err:
            steady_state(driven_params(), max_iter=2)
        assert err.value.last is not None


class TestSteadyStateOracle:
    def test_undriven_is_zero(self):
        assert steady_state_oracle(driven_params(drive_amplitude=0.0)).m1_s == 0

    def test_decoupled_mode_closed_form(self):
        p = driven_params(g1=0.0, g2=0.0, J=0.0, G0=0.0)
        ss = steady_state_oracle(p)
        d = detunings(p)
        expected = p.drive_amplitude / (1j * (d.delta_m1 + p.delta_B) + p.kappa_m1)
        assert ss.m1_s == pytest.approx(expected, rel=1e-12)
        assert ss.c_s == 0 and ss.m2_s == 0

    def test_requires_drive_pathway(self):
        from magnomech import OracleError
        p = driven_params(drive_amplitude=None, G_direct=1.0)
        with pytest.raises(OracleError):
            steady_state_oracle(p)


class TestDriftMatrix:
    def test_decoupled_block_structure(self):
        p = driven_params(g1=0.0, g2=0.0, J=0.0, G0=0.0, drive_amplitude=0.0)
        A = build_drift(p, steady_state(p))
        d = detunings(p)
        expected = np.zeros((8, 8))
        for i, (delta, kappa) in enumerate([
                (d.delta_c, p.kappa_c),
                (d.delta_m1 + p.delta_B, p.kappa_m1),
                (d.delta_m2, p.kappa_m2)]):
            expected[2 * i:2 * i + 2, 2 * i:2 * i + 2] = [[-kappa, delta],
                                                          [-delta, -kappa]]
        expected[6:, 6:] = [[0.0, p.omega_b], [-p.omega_b, -p.gamma_b]]
        assert np.array_equal(A, expected)

    def test_table_coupling_entry(self):
        # row 1, column 4 (1-indexed) carries the magnon(1)-cavity rate
        p = driven_params(drive_amplitude=None, G_direct=TWO_PI * 4.8e6)
        A = build_drift(p, steady_state(p))
        assert A[0, 3] == TWO_PI * 3.2e6

    def test_structural_zeros_for_random_parameters(self, rng):
        for _ in range(25):
            p = driven_params(
                g1=rng.uniform(0, 1e7), g2=rng.uniform(0, 1e7),
                J=rng.uniform(0, 1e7), delta_B=rng.uniform(-1e7, 1e7),
                drive_amplitude=rng.uniform(0, 1e14))
            A = build_drift(p, steady_state(p))
            for i in range(8):
                for j in range(8):
                    if (i, j) not in DRIFT_SUPPORT:
                        assert A[i, j] == 0.0, (i, j)

    def test_diagonal_carries_decays(self):
        p = driven_params()
        A = build_drift(p, steady_state(p))
        assert np.array_equal(
            np.diag(A),
            [-p.kappa_c, -p.kappa_c, -p.kappa_m1, -p.kappa_m1,
             -p.kappa_m2, -p.kappa_m2, 0.0, -p.gamma_b])

    def test_barnett_flip_changes_exactly_two_entries(self):
        p = driven_params(drive_amplitude=None, G_direct=TWO_PI * 4.8e6)
        A_pos = build_drift(p, steady_state(p))
        p_neg = p.with_changes(delta_B=-p.delta_B)
        A_neg = build_drift(p_neg, steady_state(p_neg))
        diff = np.argwhere(A_pos != A_neg)
        assert {tuple(ij) for ij in diff} == {(2, 3), (3, 2)}

    def test_imaginary_coupling_warns(self):
        from magnomech.model import SteadyState
        p = driven_params()
        ss = SteadyState(0j, 0j, 0j, 0.0, 0.0, 1e6 * (1 + 0.01j))
        with pytest.warns(UserWarning, match="not real"):
            build_drift(p, ss)


class TestDiffusionMatrix:
    def test_zero_temperature_diagonal(self):
        p = driven_params(temperature=0.0)
        F = build_diffusion(p)
        assert np.array_equal(
            F, np.diag([p.kappa_c, p.kappa_c, p.kappa_m1, p.kappa_m1,
                        p.kappa_m2, p.kappa_m2, 0.0, p.gamma_b]))

    def test_position_slot_always_zero(self, rng):
        for temp in (0.0, 0.01, 0.3):
            F = build_diffusion(driven_params(temperature=temp))
            assert F[6, 6] == 0.0

    def test_phonon_entry_composes_bose_formula(self):
        p = driven_params(temperature=0.01)
        n_b = thermal_occupation(p.omega_b, 0.01)
        assert build_diffusion(p)[7, 7] == pytest.approx(
            p.gamma_b * (2 * n_b + 1), rel=1e-14)


class TestStability:
    def test_decoupled_damped_system_is_stable(self):
        p = driven_params(g1=0.0, g2=0.0, J=0.0, G0=0.0, drive_amplitude=0.0)
        report = is_stable(build_drift(p, steady_state(p)))
        assert report.stable and report.abscissa < 0

    def test_marginal_flag_on_undamped_oscillator(self):
        A = np.zeros((8, 8))
        for i in range(3):
            A[2 * i:2 * i + 2, 2 * i:2 * i + 2] = [[-1.0, 2.0], [-2.0, -1.0]]
        A[6:, 6:] = [[0.0, 5.0], [-5.0, 0.0]]  # gamma_b -> 0: poles on the axis
        report = is_stable(A)
        assert report.marginal
        assert abs(report.abscissa) < 1e-9 * np.abs(A).max()

    def test_report_is_truthy_iff_stable(self):
        assert bool(is_stable(-np.eye(8)))
        assert not bool(is_stable(np.eye(8)))
