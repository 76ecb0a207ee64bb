"""
Radius as a function of the weight
==================================

The radius of |f|^p + lam * sum |a_k| r^k <= 1 depends only on lam / p.  This
script tabulates it and, if matplotlib is available, saves a plot next to the
script.  The same table is available from the command line:

    bohr-kit sweep --theorem 31 --axis p=0.25:1.5:0.25 --axis lambda=0.1:3:0.1
"""

from pathlib import Path

import numpy as np

from bohr_kit import TheoremParams, sharp_radius

lams = np.linspace(0.05, 3, 60)
curves = {}
for p in (0.25, 0.5, 1.0, 1.25, 1.5):
    curves[p] = [sharp_radius("31", TheoremParams.of("31", p=p, lam=lam)).value for lam in lams]
    print(f"p={p}: R ranges over [{min(curves[p]):.4f}, {max(curves[p]):.4f}]")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(6, 4))
    for p, values in curves.items():
        ax.plot(lams, values, label=f"p = {p}")
    ax.axhline(1 / 3, color="grey", lw=0.5, ls="--")
    ax.set_xlabel("lambda")
    ax.set_ylabel("sharp radius")
    ax.legend()
    out = Path(__file__).with_suffix(".png")
    fig.savefig(out, dpi=120, bbox_inches="tight")
    print("saved", out)
