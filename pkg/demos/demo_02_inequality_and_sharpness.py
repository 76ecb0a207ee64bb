"""
Checking an inequality and its sharpness
========================================

Below the sharp radius the majorant functional never exceeds 1 (its supremum
over a = |f(0)| sits at a = 1).  Just above it, the Moebius function
(a - z)/(1 - a z) with a close to 1 pushes the left-hand side over 1.  The
empirical radius is the point where that first happens.
"""

from bohr_kit import (TheoremParams, check_holds, empirical_radius, sharp_radius,
                      sharpness_witness)

prm = TheoremParams.of("31", p=1, lam=1)
R = sharp_radius("31", prm).value
print(f"closed-form radius {R:.12f}")

for r in (0.20, 0.23, R, 0.24, 0.25):
    maj = check_holds("31", prm, r, "majorant")
    ext = check_holds("31", prm, r, "extremal")
    print(f"r={r:.6f}  sup majorant={maj.sup_value:.15f} ({maj.verdict})"
          f"  sup extremal={ext.sup_value:.15f} at a={ext.argmax_a:.6f} ({ext.verdict})")

# %%
# The witness a drifts towards 1 as r approaches the radius from above.
for dr in (1e-1, 1e-2, 1e-3, 1e-4):
    w = sharpness_witness("31", prm, R + dr)
    print(f"r = R + {dr:.0e}: witness a = {w.a:.8f}, excess = {w.excess:.3e}")

# %%
# Recover the radius without the closed form.
for theorem, kw in [("31", dict(p=1.5, lam=1.2)), ("32", dict(p=0.5, lam=2)),
                    ("33", dict(t=0.8, p=0.5))]:
    params = TheoremParams.of(theorem, **kw)
    emp = empirical_radius(theorem, params, 1e-7)
    closed = sharp_radius(theorem, params).value
    print(f"{theorem} {kw}: empirical {emp:.9f}  closed form {closed:.9f}  diff {emp - closed:+.1e}")
