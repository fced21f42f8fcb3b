# Bidirectional contrast ratios: how completely does reversing the
# rotation (the sign of the Barnett shift) switch each bipartition off?
# X = 1 means the resource exists for one drive direction only.
#
# Outputs: demos/output/contrast_ratios.png

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from magnomech import figure_preset, run_sweep

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

results = {r.spec.label: r for r in
           (run_sweep(s, threads=2) for s in figure_preset("fig7"))}

STYLES = {"fig7_dB015": ("k", r"$|\Delta_B| = 0.15\,\omega_b$"),
          "fig7_dB020": ("r", r"$|\Delta_B| = 0.20\,\omega_b$"),
          "fig7_dB025": ("b", r"$|\Delta_B| = 0.25\,\omega_b$")}


def column(result, name):
    idx = result.columns.index(name)
    return np.array([np.nan if row[idx] is None else row[idx]
                     for row in result.rows])


fig, axes = plt.subplots(1, 3, figsize=(12, 3.6), sharex=True, sharey=True)
for ax, pair, title in zip(axes, ("m1m2", "m2b", "cb"),
                           (r"$X_{m_1 m_2}$", r"$X_{m_2 b}$", r"$X_{cb}$")):
    for label, (color, text) in STYLES.items():
        r = results[label]
        ax.plot(column(r, "delta_c_over_omega_b"), column(r, f"X_{pair}"),
                color=color, lw=1.1, label=text)
    ax.set_xlabel(r"$\Delta_c/\omega_b$")
    ax.set_ylim(-0.03, 1.05)
    ax.set_title(title)
    ax.grid(alpha=0.2)
axes[0].set_ylabel("contrast ratio")
axes[0].legend(frameon=False, fontsize=8)
fig.tight_layout()
fig.savefig(os.path.join(OUT, "contrast_ratios.png"), dpi=150)
print("wrote contrast_ratios.png")

# detuning windows with ideal nonreciprocity (X = 1) at |delta_B| = 0.2
r = results["fig7_dB020"]
dc = column(r, "delta_c_over_omega_b")
for pair in ("m1m2", "m2b", "cb"):
    ideal = dc[np.nan_to_num(column(r, f"X_{pair}")) == 1.0]
    if ideal.size:
        print(f"X_{pair} = 1 (ideal) for delta_c/omega_b in "
              f"[{ideal.min():.2f}, {ideal.max():.2f}]")
