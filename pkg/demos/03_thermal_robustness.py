# Temperature dependence of the three bipartitions for the three Barnett
# settings.  The rotation direction decides which bipartition survives
# hottest; everything is gone by a quarter kelvin.
#
# Outputs: demos/output/thermal_robustness.png

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from magnomech import figure_preset, run_sweep

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

results = {r.spec.label: r for r in
           (run_sweep(s, threads=2) for s in figure_preset("fig4"))}

STYLES = {"fig4_dB0": ("tab:gray", r"$\Delta_B = 0$"),
          "fig4_dBpos": ("k", r"$\Delta_B = +0.2\,\omega_b$"),
          "fig4_dBneg": ("r", r"$\Delta_B = -0.2\,\omega_b$")}


def column(result, name):
    idx = result.columns.index(name)
    return np.array([np.nan if row[idx] is None else row[idx]
                     for row in result.rows])


fig, axes = plt.subplots(1, 3, figsize=(12, 3.6), sharex=True)
for ax, pair, title in zip(axes, ("m1m2", "m2b", "cb"),
                           (r"$E_{m_1 m_2}$", r"$E_{m_2 b}$", r"$E_{cb}$")):
    for label, (color, text) in STYLES.items():
        r = results[label]
        ax.plot(column(r, "temperature"), column(r, f"E_{pair}"),
                color=color, label=text)
    ax.set_xlabel("T (K)")
    ax.set_title(title)
    ax.grid(alpha=0.2)
axes[0].set_ylabel(r"$E_n$")
axes[0].legend(frameon=False, fontsize=8)
fig.tight_layout()
fig.savefig(os.path.join(OUT, "thermal_robustness.png"), dpi=150)
print("wrote thermal_robustness.png")

# death temperatures per bipartition and Barnett setting
for label, r in results.items():
    T = column(r, "temperature")
    deaths = []
    for pair in ("m1m2", "m2b", "cb"):
        E = column(r, f"E_{pair}")
        dead = T[(E == 0) & (T > 0.02)]
        deaths.append(f"{pair}: {dead.min():.3f} K" if dead.size else f"{pair}: > 0.25 K")
    print(f"{label:12s} entanglement death -> " + ", ".join(deaths))
