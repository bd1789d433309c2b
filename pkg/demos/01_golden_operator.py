"""
A nilpotent operator of index three over Z_7
============================================

The algebra is J_4(-1,-1,-1) over Z_7.  We rebuild a known operator from
its parameters and check the weight-zero Rota-Baxter identity on it.
"""

from rbjordan import CliffordAlgebra, FieldCtx, check_rb, format_operator
from rbjordan.constructions import Example5Params, build_example5, example6_operator

Z7 = FieldCtx.prime(7)
J = CliffordAlgebra.over(Z7, (-1, -1, -1))

# k = (1, 2, 3) is isotropic for f, and x0 = 1 solves x^2 + d1 d2 d3 = 0
R = build_example5(J, Example5Params(k=(1, 2, 3), x0=1))
print(format_operator(R))
print("same as the fixture:", R == example6_operator())

report = check_rb(R)
print("RB of weight 0:", report.is_rb)
print("nilpotency index:", report.nilpotency_index)

# R(1) is a nonzero pure vector, so the structure flags on R(e_i) apply
for name, ok in vars(report.lemma_flags).items():
    print(f"  {name:10s} {ok}")
