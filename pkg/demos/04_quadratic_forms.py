"""
Solving the side conditions
===========================

The explicit families need isotropic vectors and representations of 1.
Over Z_p the solvers enumerate; over Q the search is bounded by height.
"""

from fractions import Fraction

from rbjordan import CliffordAlgebra, FieldCtx, check_rb
from rbjordan.constructions import auto_example4_params, build_example4
from rbjordan.quadform import DiagonalForm, isotropic_vector, represent, unit_representation

Z5, Q = FieldCtx.prime(5), FieldCtx.rationals()

print(isotropic_vector(DiagonalForm(Z5, (1, 1, 1))))      # (1, 2, 0)
print(represent(1, 1, 2, Z5))                              # (1, 1)
print(isotropic_vector(DiagonalForm(Z5, (1, 2))))          # None: -2 is not a square mod 5

# over Q: a solution, a proved absence, and a search that runs out of height
print(isotropic_vector(DiagonalForm(Q, (1, 1, -2))))
print(isotropic_vector(DiagonalForm(Q, (1, -3, 1))))       # obstructed at 3
print(isotropic_vector(DiagonalForm(Q, (-2, 11, 13)), height_bound=5))
print(unit_representation(DiagonalForm(Q, (Fraction(1, 2), Fraction(1, 2)))))

# the split family on six dimensions needs one of each
J = CliffordAlgebra.over(Q, (1, 2, 1, 1, -1))
params = auto_example4_params(J)
print(params)
R = build_example4(J, params)
print("RB:", check_rb(R).is_rb, " index:", check_rb(R).nilpotency_index)
