"""
Bohr sums from coefficient data
===============================

Coefficient moduli can be loaded from a text file and summed at any radius.
Indices that break |a_k| <= 1 - |a_0|^2 are flagged (a function bounded by 1
cannot produce them), but the data is still usable.
"""

import tempfile
import warnings
from pathlib import Path

from bohr_kit import (MoebiusFamily, bohr_partial_sum, load_series, moebius_coefficients,
                      moebius_tail_closed)

fam = MoebiusFamily(0.7)
series = moebius_coefficients(fam, 200)
for r in (0.1, 1 / 3, 0.45):
    value, tail = bohr_partial_sum(series, r, skip_constant=True)
    print(f"r={r:.4f}  partial sum={value:.15f}  closed={moebius_tail_closed(fam, r):.15f}"
          f"  tail bound={tail:.1e}")

# The classical Bohr sum of f(z) = z reaches 1/3 at r = 1/3 once |a_0| is added.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "coeffs.txt"
    path.write_text("0.9\n0.5\n0.1\ntail_ratio=0.2\n", encoding="utf-8")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        data = load_series(path)
    print("loaded", data.moduli, "tail ratio", data.tail_ratio, "flagged", data.flagged)
    for w in caught:
        print("warning:", w.message)
    print("Bohr sum at r=1/3:", bohr_partial_sum(data, 1 / 3))
