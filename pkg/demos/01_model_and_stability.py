# Build the shipped parameter set, inspect the linearized model objects and
# map out where the steady state exists at all (the stability gate).
#
# Outputs: demos/output/stability_map.png

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from magnomech import (build_diffusion, build_drift, detunings, is_stable,
                       steady_state, table1_params)

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

# ---------------------------------------------------------------
# The base configuration: table values plus documented assumptions
# ---------------------------------------------------------------

params = table1_params()             # J = 0 here; the map below uses J = g1
wb = params.omega_b

d = detunings(params)
print("detunings (units of omega_b):")
print(f"  delta_c  = {d.delta_c / wb:+.2f}")
print(f"  delta_m1 = {d.delta_m1 / wb:+.2f}   (+ Barnett {params.delta_B / wb:+.2f})")
print(f"  delta_m2 = {d.delta_m2 / wb:+.2f}")

ss = steady_state(params)            # G_direct pathway: amplitudes are zero
print(f"\neffective magnomechanical coupling G/2pi = {abs(ss.G_eff) / (2 * np.pi):.3e} Hz")

A = build_drift(params, ss)
F = build_diffusion(params)
print(f"\ndrift matrix: {A.shape}, {np.count_nonzero(A)} structural nonzeros")
print(f"diffusion diagonal / kappa_m1: {np.round(np.diag(F) / params.kappa_m1, 4)}")

report = is_stable(A)
print(f"\nbase point stable: {report.stable} "
      f"(spectral abscissa {report.abscissa:.3e} rad/s)")

# switch on the caption-value magnon-magnon coupling for the map
params = params.with_changes(J=params.g1)

# ---------------------------------------------------------------
# Stability map over (delta_c, delta_B): the Barnett shift can push
# the driven system over the parametric-instability threshold
# ---------------------------------------------------------------

dc_grid = np.linspace(-2.0, 1.0, 121)
db_grid = np.linspace(-0.4, 0.4, 81)
abscissa = np.zeros((db_grid.size, dc_grid.size))
for i, dbn in enumerate(db_grid):
    for j, dcn in enumerate(dc_grid):
        p = params.with_changes(omega_c=params.omega_drive + dcn * wb,
                                delta_B=dbn * wb)
        abscissa[i, j] = is_stable(build_drift(p, steady_state(p))).abscissa

fig, ax = plt.subplots(figsize=(7, 4.2))
pcm = ax.pcolormesh(dc_grid, db_grid, np.sign(abscissa),
                    cmap="RdYlGn_r", shading="auto")
ax.set_xlabel(r"$\Delta_c/\omega_b$")
ax.set_ylabel(r"$\Delta_B/\omega_b$")
ax.set_title("stability gate (green: stable, red: no steady state)")
fig.colorbar(pcm, ax=ax, label="sign of spectral abscissa")
fig.tight_layout()
fig.savefig(os.path.join(OUT, "stability_map.png"), dpi=150)
print(f"\nwrote {os.path.join(OUT, 'stability_map.png')}")
print(f"unstable fraction of the scanned plane: "
      f"{(abscissa >= 0).mean():.3f}")
