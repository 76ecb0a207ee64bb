"""
The derivative-sum convex combination
=====================================

t|f| + (1-t) sum |f^(k)/k!| r^k + (1-t)|a_0| <= 1 holds for r <= r_t, where r_t
switches formula at t*.  No sharpness is claimed for this case, so here we
only explore: the Moebius witnesses at z = r first appear somewhat above r_t,
leaving a gap that any sharper bound would have to close.
"""

import numpy as np

from bohr_kit import TheoremParams, check_holds, empirical_radius, lemma26_branch_radii, tstar

print(f"t* = {tstar():.12f}")
print(" t      r1          r2          r_t         empirical   gap")
for t in np.linspace(0.1, 0.95, 9):
    prm = TheoremParams.of("34", t=t)
    r1, r2 = lemma26_branch_radii(t)
    r_t = min(r1, r2)
    emp = empirical_radius("34", prm)
    assert check_holds("34", prm, r_t, "majorant").sup_value <= 1 + 1e-12
    print(f"{t:.3f}  {r1:.8f}  {r2:.8f}  {r_t:.8f}  {emp:.8f}  {emp - r_t:.2e}")
