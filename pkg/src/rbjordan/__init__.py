"""Rota-Baxter operators of zero weight on Jordan algebras of Clifford type."""

from .constructions import (
    Example4Params, Example5Params, J3Params, auto_example4_params, auto_example5_params,
    build_bigc, build_example4, build_example5, build_j3, example6_operator, find_witness,
    solve_j3_params,
)
from .errors import (
    BudgetExceeded, ConstraintViolated, DimensionMismatch, DivisionByZero, HypothesisViolated,
    MissingRoots, MixedFields, NotApplicable, ParseError, RBJordanError, UnsupportedField,
)
from .jordan import AlgebraElement, BilinearForm, CliffordAlgebra, bilinear, product, trace_norm
from .quadform import UNDECIDED, DiagonalForm, isotropic_vector, represent, unit_representation
from .rbindex import (
    Census, RbIndexVerdict, SearchConfig, census, rb_index_bruteforce, rb_index_table,
)
from .rbop import (
    LemmaFlags, LinOperator, RBReport, apply, check_rb, check_remark2, extend_by_zero,
    lemma_diagnostics, nilpotency_index, parse_operator, format_operator,
)
from .scalars import FieldCtx, legendre, p_mod4_class, sqrt_mod

__version__ = "0.1.0"
