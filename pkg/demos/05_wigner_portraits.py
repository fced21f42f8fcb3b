# Phase-space portraits of all four modes for both rotation directions.
# The dashed unit circle is the vacuum 1/e contour; a steady-state contour
# squeezed inside it along any direction beats the vacuum variance there.
#
# Outputs: demos/output/wigner_portraits.png

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from magnomech import (figure_preset, quadrature_squeezing, reduce,
                       solve_covariance, wigner_grid)
from magnomech.sweep import apply_sweep_value

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

(spec,) = figure_preset("fig6")
titles = {"c": "cavity", "m1": "magnon 1", "m2": "magnon 2", "b": "phonon"}

fig, axes = plt.subplots(2, 4, figsize=(13, 6.2))
for row, value in enumerate(spec.grid()[::-1]):     # +0.2 first, then -0.2
    params = apply_sweep_value(spec.params, "delta_B", value)
    _, _, _, report, C = solve_covariance(params)
    sign = "+" if value > 0 else "-"
    for colno, mode in enumerate(spec.wigner_modes):
        ax = axes[row][colno]
        C2 = reduce(C, [mode])
        grid = wigner_grid(C2, half_range_sigmas=3.5, resolution=161, mode=mode)
        ax.pcolormesh(grid.x, grid.p, grid.W.T, cmap="magma", shading="auto")
        phi = np.linspace(0, 2 * np.pi, 200)
        ax.plot(np.cos(phi), np.sin(phi), "w--", lw=0.8)   # vacuum contour
        e = grid.contour
        ax.plot(e.semi_axis_a * np.cos(phi) * np.cos(e.theta)
                - e.semi_axis_b * np.sin(phi) * np.sin(e.theta),
                e.semi_axis_a * np.cos(phi) * np.sin(e.theta)
                + e.semi_axis_b * np.sin(phi) * np.cos(e.theta),
                "c-", lw=1.1)                               # steady 1/e contour
        v_min, squeezed = quadrature_squeezing(C2)
        ax.set_title(f"{titles[mode]}  ($\\Delta_B {sign}$)"
                     + ("  squeezed" if squeezed else ""), fontsize=9)
        ax.set_aspect("equal")
        if colno == 0:
            ax.set_ylabel(r"$\delta Y$")
        if row == 1:
            ax.set_xlabel(r"$\delta X$")
        print(f"delta_B {sign}0.2 w_b, {titles[mode]:8s}: min variance "
              f"{v_min:.3f}" + ("  (< 1/2: squeezed)" if squeezed else ""))
fig.tight_layout()
fig.savefig(os.path.join(OUT, "wigner_portraits.png"), dpi=150)
print("wrote wigner_portraits.png")
