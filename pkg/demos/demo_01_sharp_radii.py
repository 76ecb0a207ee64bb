"""
Sharp radii at a glance
=======================

Each inequality comes with a radius below which it holds for every analytic
self-map of the disk.  This script prints them for a few parameter choices and
shows how the stable closed forms pass smoothly through the points where the
usual printed formulas turn into 0/0.
"""

import math

from bohr_kit import TheoremParams, literal_radius, sharp_radius, tstar

P = TheoremParams.of

# |f(z)|^p + lam * sum_{k>=1} |a_k| r^k <= 1
# p = lam = 1 recovers sqrt(5) - 2; p = 2 lam gives exactly 1/3.
for p, lam in [(1, 1), (1, 0.5), (0.5, 3), (1.25, 1.0), (2, 1)]:
    res = sharp_radius("31", P("31", p=p, lam=lam))
    print(f"31  p={p:<5} lam={lam:<5} R={res.value:.12f}  region={res.region:<8} branch={res.branch}")
print("sqrt(5)-2 =", math.sqrt(5) - 2)

# Derivative sums force r < 1/2.
for p, lam in [(1, 1), (0.5, 0.1), (1, 10)]:
    print(f"32  p={p:<5} lam={lam:<5} r={sharp_radius('32', P('32', p=p, lam=lam)).value:.12f}")

# Convex combination; t -> 0 gives back the classical 1/3.
for t, p in [(0.5, 1), (3 / 4, 1), (1e-9, 0.5)]:
    print(f"33  t={t:<8.3g} p={p:<3} R={sharp_radius('33', P('33', t=t, p=p)).value:.12f}")

# Two branches meeting at t*.
print(f"t* = {tstar():.15f}")
for t in (0.3, 0.8, tstar(), 0.81, 0.95):
    res = sharp_radius("34", P("34", t=t))
    print(f"34  t={t:.6f} r_t={res.value:.12f}  {res.branch}")

# Lacunary series starting at z^N.
for n in (2, 3, 5, 10):
    print(f"12  N={n:<3} R_N={sharp_radius('12', P('12', n=n)).value:.12f}")

# %%
# Near the split point p = 2 lam the printed formula loses digits, the stable
# one does not.
for eps in (1e-3, 1e-6, 1e-9, 1e-12):
    prm = P("31", p=1, lam=0.5 + eps)
    print(f"lam = 0.5 + {eps:.0e}: stable {sharp_radius('31', prm).value:.16f}"
          f"   printed {literal_radius('31', prm):.16f}")
