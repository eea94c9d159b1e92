"""
Joins and the tensor-basis factorizations of E8 and E6
======================================================

The join of polarized lattices multiplies polarizations by Kronecker
product.  A4 * A2 * A1 carries an order-30 Coxeter element, and a
mutation word turns its standard basis into a set of E8 simple roots;
the change of basis G conjugates the tensor Coxeter element into a
product of simple reflections — all exactly, over the integers.
"""

from __future__ import annotations

from coxlat.gabrielov import (
    conjugation_report_e6,
    conjugation_report_e8,
    e6_factorization,
    e8_factorization,
    root_image_count,
)
from coxlat.lattice import coxeter, coxeter_order, join, standard_polarization
from coxlat.rootsys import RootSystemId, cartan_matrix

# build the triple join A4 * A2 * A1
P = standard_polarization(cartan_matrix(RootSystemId.parse("A4")))
for name in ("A2", "A1"):
    P = join(P, standard_polarization(cartan_matrix(RootSystemId.parse(name))))
C_star = coxeter(P)
print(f"join rank {P.rank}, Coxeter element integral: {C_star.integral}, "
      f"order {coxeter_order(C_star.C)}")

# the mutation word produces E8 simple roots; all checks are exact
G, report = e8_factorization()
print("\nE8 factorization:", report["status"])
for check in report["checks"]:
    print(f"  {check['identity']:24s} deviation {check['max_abs_deviation']}")
print("  tree relabeling:", report["relabeling"])
print("  change of basis G:")
for row in G.T:
    print("   ", [int(v) for v in row])

# E6 from A3 * A2 * A1, same machinery
_, report6 = e6_factorization()
print("\nE6 factorization:", report6["status"])

# conjugating words between the bipartite and factorized Coxeter elements
rep8 = conjugation_report_e8()
print(f"\nE8 conjugator {rep8['word']}: {rep8['status']}")
rep6 = conjugation_report_e6()
print(f"E6 conjugator {rep6['word']}: {rep6['checks'][0]['status']} as written")
if rep6["repaired_word"] is not None:
    print(f"  repaired by BFS: {rep6['repaired_word']} -> {rep6['status']}")

# the 240 tensor root triples map onto the 60 roots seen by the basis change
count, all_norm_2 = root_image_count()
print(f"\nroot triples -> {count} distinct images, all of norm 2: {all_norm_2}")
