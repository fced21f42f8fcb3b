"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as
they are produced.
"""

import math
import os
import subprocess
import sys
import time

import numpy as np
import pytest

from magnomech import (figure_preset, log_negativity, lyapunov_integral_oracle,
                       lyapunov_residual, run_sweep, solve_lyapunov,
                       wigner_grid)
from conftest import random_stable_system, tmsv

THREADS = min(4, os.cpu_count() or 1)


def report(number, ok, detail):
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, detail


@pytest.fixture(scope="module")
def preset_results():
    """Every figure preset, run once at desk scale and shared across criteria."""
    out = {}
    for fig_id in ("fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"):
        out[fig_id] = [run_sweep(spec) for spec in figure_preset(fig_id)]
    return out


def rows_as_dicts(result):
    return [dict(zip(result.columns, row)) for row in result.rows]


def test_criterion_1_lyapunov_correctness():
    rng = np.random.default_rng(1234)
    worst_residual_ratio = 0.0
    worst_agreement = 0.0
    t0 = time.perf_counter()
    for _ in range(100):
        A, F = random_stable_system(rng)
        C = solve_lyapunov(A, F)
        worst_residual_ratio = max(
            worst_residual_ratio,
            lyapunov_residual(A, C, F) / np.abs(F).max())
        C_oracle = lyapunov_integral_oracle(A, F, tol=1e-12)
        worst_agreement = max(
            worst_agreement,
            np.linalg.norm(C - C_oracle, "fro") / np.linalg.norm(C, "fro"))
    elapsed = time.perf_counter() - t0
    ok = (worst_residual_ratio <= 1e-10 and worst_agreement <= 1e-6
          and elapsed < 5.0)
    report(1, ok,
           f"100 systems: residual/||F|| <= {worst_residual_ratio:.2e}, "
           f"solver-vs-oracle <= {worst_agreement:.2e}, {elapsed:.2f} s")


def test_criterion_2_analytic_negativity():
    errs = []
    for r in (0.1, 0.5, 1.0):
        errs.append(abs(log_negativity(tmsv(r)).E_n - 2 * r))
    vacuum_E = log_negativity(0.5 * np.eye(4)).E_n
    ok = max(errs) <= 1e-9 and vacuum_E == 0.0
    report(2, ok,
           f"TMSV |E - 2r| <= {max(errs):.2e}, vacuum E = {vacuum_E!r}")


def test_criterion_3_physicality_across_presets(preset_results):
    checked = 0
    worst = np.inf
    for results in preset_results.values():
        for result in results:
            for rec in rows_as_dicts(result):
                for key in ("nu_min", "nu_min_pos", "nu_min_neg"):
                    if rec.get(key) is not None:
                        checked += 1
                        worst = min(worst, rec[key])
    ok = checked > 0 and worst >= 0.5 - 1e-9
    report(3, ok,
           f"{checked} stable preset points, min symplectic eigenvalue {worst:.12f}")


def test_criterion_4_nonreciprocity_window(preset_results):
    result = next(r for r in preset_results["fig3"]
                  if r.spec.label == "fig3_Jg1")
    window = [rec for rec in rows_as_dicts(result)
              if rec["status_pos"] == "ok" and rec["status_neg"] == "ok"
              and rec["E_m1m2_pos"] is not None and rec["E_m1m2_pos"] > 0.0
              and rec["E_m1m2_neg"] == 0.0]
    contrasts = {rec["X_m1m2"] for rec in window}
    ok = len(window) > 0 and contrasts == {1.0}
    lo = min((rec["delta_c_over_omega_b"] for rec in window), default=float("nan"))
    hi = max((rec["delta_c_over_omega_b"] for rec in window), default=float("nan"))
    report(4, ok,
           f"{len(window)} grid points with E+>0, E-=0 (X=1) in "
           f"delta_c/omega_b [{lo:.3f}, {hi:.3f}]")


def _non_increasing_past_peak(values, tol=1e-9):
    finite = [v for v in values if v is not None]
    if not finite:
        return True
    peak = int(np.argmax(finite))
    return all(b <= a + tol for a, b in zip(finite[peak:], finite[peak + 1:]))


def test_criterion_5_thermal_decay(preset_results):
    problems = []
    for result in preset_results["fig4"]:
        for pair in ("E_m1m2", "E_m2b", "E_cb"):
            series = [rec[pair] for rec in rows_as_dicts(result)]
            if not _non_increasing_past_peak(series):
                problems.append(f"{result.spec.label}:{pair} not monotone")
            if series[-1] is None or series[-1] > 1e-12:
                problems.append(f"{result.spec.label}:{pair} nonzero at 0.25 K")
    for result in preset_results["fig8"]:
        if not result.spec.label.startswith("fig8b_"):
            continue
        series = [(rec["temperature"], rec["Rmin_m1cb"])
                  for rec in rows_as_dicts(result)]
        if not _non_increasing_past_peak([v for _, v in series]):
            problems.append(f"{result.spec.label}: R_min not monotone")
        if result.spec.label != "fig8b_dB0":  # Barnett on: dead by ~0.15 K
            late = [v for t, v in series if t >= 0.16 and v is not None]
            if any(v > 1e-12 for v in late):
                problems.append(f"{result.spec.label}: R_min alive past 0.16 K")
    report(5, not problems, "; ".join(problems) or
           "all measures decay to zero by 0.25 K; R_min(dB!=0) gone by ~0.15 K")


def test_criterion_6_contrast_bounds(preset_results):
    checked = 0
    violations = []
    for result in preset_results["fig7"]:
        for rec in rows_as_dicts(result):
            for pair in ("m1m2", "m2b", "cb"):
                x = rec[f"X_{pair}"]
                if x is None:
                    continue
                checked += 1
                if not 0.0 <= x <= 1.0:
                    violations.append(f"X_{pair} = {x}")
                if (rec[f"E_{pair}_pos"] == 0.0 and rec[f"E_{pair}_neg"] == 0.0
                        and x != 0.0):
                    violations.append(f"X_{pair} != 0 at double zero")
    ok = checked > 0 and not violations
    report(6, ok, f"{checked} contrast values in [0, 1]"
           + (f"; violations: {violations[:3]}" if violations else ""))


def test_criterion_7_monogamy(preset_results):
    worst = np.inf
    checked = 0
    for result in preset_results["fig8"]:
        for rec in rows_as_dicts(result):
            for key in ("Rraw_m1cb", "Rraw_m1cb_pos", "Rraw_m1cb_neg"):
                if rec.get(key) is not None:
                    checked += 1
                    worst = min(worst, rec[key])
    ok = checked > 0 and worst >= -1e-9
    report(7, ok,
           f"{checked} stable tripartite points, min raw contangle {worst:.3e}")


def test_criterion_8_wigner_normalization_and_geometry(preset_results):
    problems = []
    vac = wigner_grid(0.5 * np.eye(2))
    if abs(vac.contour.semi_axis_a - 1.0) > 1e-6 or \
            abs(vac.contour.semi_axis_b - 1.0) > 1e-6:
        problems.append("vacuum contour radius not 1")
    from magnomech import reduce, solve_covariance
    from magnomech.sweep import apply_sweep_value
    spec = figure_preset("fig6")[0]
    for value in spec.grid():
        params = apply_sweep_value(spec.params, spec.parameter, value)
        _, _, _, rep, C = solve_covariance(params)
        if not rep.stable:
            problems.append(f"fig6 point {value} unstable")
            continue
        for mode in spec.wigner_modes:
            C2 = reduce(C, [mode])
            grid = wigner_grid(C2, mode=mode)
            norm = grid.normalization()
            if not 0.999 <= norm <= 1.001:
                problems.append(f"{mode}: normalization {norm}")
            area_expected = 2 * math.pi * math.sqrt(np.linalg.det(C2))
            if abs(grid.contour.area - area_expected) > 1e-6 * area_expected:
                problems.append(f"{mode}: contour area off")
    report(8, not problems, "; ".join(problems) or
           "8 preset grids normalized to 1e-3; vacuum radius and areas exact to 1e-6")


def test_criterion_9_determinism_across_threads(tmp_path):
    outs = []
    for threads, sub in (("1", "a"), ("4", "b")):
        out = tmp_path / sub
        proc = subprocess.run(
            [sys.executable, "-m", "magnomech.cli", "figure", "fig2",
             "--out", str(out), "--threads", threads],
            capture_output=True, text=True)
        assert proc.returncode == 3, proc.stderr
        outs.append(out)
    names = sorted(os.listdir(outs[0]))
    assert names == sorted(os.listdir(outs[1]))
    same = all((outs[0] / n).read_bytes() == (outs[1] / n).read_bytes()
               for n in names)
    report(9, same and len(names) == 21,
           f"fig2 re-run with different thread counts: {len(names)} CSVs byte-identical")


def test_criterion_10_sweep_performance():
    from magnomech import SweepSpec, table1_params
    wb = 2 * math.pi * 1e7
    spec = SweepSpec(
        params=table1_params(J_hz=3.2e6), parameter="delta_c",
        start=-2.0 * wb, stop=1.0 * wb, count=500,
        bipartite=(("m1", "m2"), ("m2", "b"), ("c", "b")),
        label="performance")
    t0 = time.perf_counter()
    result = run_sweep(spec, threads=1)
    elapsed = time.perf_counter() - t0
    ok = elapsed < 1.0 and len(result.rows) == 500
    report(10, ok, f"500-point sweep with stability gate, Lyapunov solve and "
                   f"3 bipartite measures: {elapsed:.3f} s")
