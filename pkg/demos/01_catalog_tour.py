"""
Tour of the ADE catalog
=======================

Cartan matrices, Coxeter numbers, exponents, and the two-coloring of
each diagram, plus the numeric eigenvalue check lambda_k = 4 sin^2(k*pi/2h).
"""

from __future__ import annotations

import math

import numpy as np

from coxlat.rootsys import CATALOG_IDS, RootSystemId, root_system

# every catalog member carries its full record
for rid in CATALOG_IDS:
    data = root_system(rid)
    print(f"{rid}: rank {data.rank:2d}  h = {data.h:2d}  exponents {list(data.exponents)}")

# a closer look at E8
e8 = root_system(RootSystemId.parse("E8"))
print("\nE8 Cartan matrix:")
for row in e8.cartan:
    print("  " + " ".join(f"{int(v):2d}" for v in row))

whites = sorted(v for v, c in e8.coloring.items() if c == "white")
blacks = sorted(v for v, c in e8.coloring.items() if c == "black")
print(f"white vertices: {whites}")
print(f"black vertices: {blacks}")

# the eigenvalues of the Cartan matrix are 4 sin^2(k*pi/2h) over the exponents
lams = np.linalg.eigvalsh(np.array(e8.cartan, dtype=float))
predicted = [4 * math.sin(k * math.pi / (2 * e8.h)) ** 2 for k in e8.exponents]
print("\nnumeric spectrum :", np.round(lams, 6))
print("4sin^2(k pi/2h)  :", np.round(predicted, 6))
print("max deviation    :", float(np.max(np.abs(lams - predicted))))
