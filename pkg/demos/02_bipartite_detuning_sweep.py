# Bipartite entanglement versus cavity detuning: the density map over
# (delta_c, delta_m2) with everything reciprocal, then the line cuts at
# +-delta_B where the nonreciprocal windows open up.
#
# Outputs: demos/output/bipartite_density.png, bipartite_lines.png

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from magnomech import figure_preset, run_sweep

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)


def column(result, name):
    idx = result.columns.index(name)
    return np.array([np.nan if row[idx] is None else row[idx]
                     for row in result.rows])


# ---------------------------------------------------------------
# Density maps: J = delta_B = 0, one sweep per delta_m2 slice
# ---------------------------------------------------------------

results = [run_sweep(spec, threads=2) for spec in figure_preset("fig2")]
dc = column(results[0], "delta_c_over_omega_b")
dm2 = np.array([float(r.spec.label.split("dm2")[1]) for r in results])

fig, axes = plt.subplots(1, 3, figsize=(13, 3.6), sharey=True)
for ax, pair, title in zip(axes, ("m1m2", "m2b", "cb"),
                           (r"$E_{m_1 m_2}$", r"$E_{m_2 b}$", r"$E_{cb}$")):
    Z = np.vstack([column(r, f"E_{pair}") for r in results])
    pcm = ax.pcolormesh(dc, dm2, Z, cmap="viridis", shading="auto")
    ax.set_xlabel(r"$\Delta_c/\omega_b$")
    ax.set_title(title)
    fig.colorbar(pcm, ax=ax)
axes[0].set_ylabel(r"$\Delta_{m_2}/\omega_b$")
fig.suptitle("reciprocal entanglement landscape (J = 0, no rotation)")
fig.tight_layout()
fig.savefig(os.path.join(OUT, "bipartite_density.png"), dpi=150)
print("wrote bipartite_density.png")

# ---------------------------------------------------------------
# Line cuts at delta_B = +-0.2 omega_b, without and with magnon-magnon
# coupling.  Black vs red shows the drive-direction asymmetry.
# ---------------------------------------------------------------

fig, axes = plt.subplots(2, 3, figsize=(13, 6.5), sharex=True)
for row, spec_result in enumerate(run_sweep(s, threads=2)
                                  for s in figure_preset("fig3")):
    dc = column(spec_result, "delta_c_over_omega_b")
    for ax, pair in zip(axes[row], ("m1m2", "m2b", "cb")):
        ax.plot(dc, column(spec_result, f"E_{pair}_pos"), "k-",
                label=r"$\Delta_B > 0$")
        ax.plot(dc, column(spec_result, f"E_{pair}_neg"), "r--",
                label=r"$\Delta_B < 0$")
        ax.set_title(f"E_{pair}  ({spec_result.spec.label.split('_')[1]})")
        ax.grid(alpha=0.2)
for ax in axes[1]:
    ax.set_xlabel(r"$\Delta_c/\omega_b$")
axes[0][0].legend(frameon=False, fontsize=8)
fig.suptitle("line cuts at $|\\Delta_B| = 0.2\\,\\omega_b$: gaps mark unstable points")
fig.tight_layout()
fig.savefig(os.path.join(OUT, "bipartite_lines.png"), dpi=150)
print("wrote bipartite_lines.png")

# where is entanglement strictly one-directional?
jg1 = [run_sweep(s) for s in figure_preset("fig3")][1]
pos, neg = column(jg1, "E_m1m2_pos"), column(jg1, "E_m1m2_neg")
window = column(jg1, "delta_c_over_omega_b")[(pos > 0) & (neg == 0)]
if window.size:
    print(f"one-directional magnon-magnon window: "
          f"delta_c/omega_b in [{window.min():.2f}, {window.max():.2f}]")
