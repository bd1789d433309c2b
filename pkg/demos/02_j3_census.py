"""
Every RB-operator on J_3 over Z_3
=================================

Enumerate all operators on a three-dimensional algebra and compare them with
the parametric family  R(1) = 0,  R(e_1) = k w,  R(e_2) = l w,  where
w = a + b e_1 + c e_2 has norm zero and k b + l c = 0.
"""

import itertools

from rbjordan import CliffordAlgebra, FieldCtx
from rbjordan.constructions import J3Params, build_j3
from rbjordan.rbindex import SearchConfig, census

Z3 = FieldCtx.prime(3)

for d in [(1, 1), (1, 2)]:
    J = CliffordAlgebra.over(Z3, d)
    naive = census(Z3, d, SearchConfig(pruning=False), mode="naive", keep_operators=True)
    print(f"f = {d}: counts by index {naive.counts}  ({3 ** 9} matrices scanned)")

    family = set()
    for a, b, c, k, l in itertools.product(range(3), repeat=5):
        if (a * a - d[0] * b * b - d[1] * c * c) % 3 == 0 and (k * b + l * c) % 3 == 0:
            family.add(tuple(col.coords for col in build_j3(J, J3Params(a, b, c, k, l)).columns))
    print("  family reproduces the census:", family == set(naive.operators))

# none of them squares to something nonzero
print("max index on J_3:", max(census(Z3, d).max_index for d in [(1, 1), (1, 2), (2, 2)]))
