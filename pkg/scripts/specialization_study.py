"""Compare (q)_n P_T(1,q,q^2,...) with the maj and comaj generating functions
of the class of T, shape by shape.

comaj(s) is the sum of n - i over the descents i of s.
"""

import sys

from sylvmon import fqsym, pbt, sylvester, trees
from sylvmon.qpoly import QPoly
from sylvmon.words import descents

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 4

for n in range(max_n + 1):
    maj_hits = comaj_hits = 0
    shapes = trees.enumerate_shapes(n)
    for t in shapes:
        spec = fqsym.principal_specialization(pbt.p_to_f(t))
        maj_gf = sylvester.class_maj_gf(t)
        comaj_gf = QPoly()
        for s in sylvester.permutation_class(t):
            comaj_gf = comaj_gf + QPoly.monomial(sum(n - i for i in descents(s)))
        maj_hits += spec == maj_gf
        comaj_hits += spec == comaj_gf
        if spec != maj_gf:
            print(f"n={n} {trees.serialize_tree(t)}: specialization {spec}, maj {maj_gf}, comaj {comaj_gf}")
    print(f"n={n}: {len(shapes)} shapes, equal to maj gf {maj_hits}, equal to comaj gf {comaj_hits}")
