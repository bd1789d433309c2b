"""Explicit weight-0 RB-operator families on J_{n+1}(f).

* :func:`build_j3` -- every RB-operator on J_3 has this shape; always R^2 = 0.
* :func:`build_example4` -- split family with R^2 != 0 for any n >= 3.
* :func:`build_example5` -- n = 3 family through a root of x^2 + d_1 d_2 d_3.
* :func:`build_bigc` -- n = 3 operator built from sqrt(d_i) and sqrt(-1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import ConstraintViolated, DimensionMismatch, MissingRoots, UnsupportedField
from .jordan import BilinearForm, CliffordAlgebra
from .quadform import UNDECIDED, DiagonalForm, isotropic_vector, unit_representation
from .rbop import LinOperator, extend_by_zero, permute_operator
from .scalars import FieldCtx, sqrt_mod


def field_sqrt(a, ctx: FieldCtx):
    """A square root of ``a`` in the field itself, or ``None``."""
    if ctx.is_prime:
        return sqrt_mod(a, ctx)
    a = Fraction(a)
    if a < 0:
        return None
    num, den = isqrt(a.numerator), isqrt(a.denominator)
    if num * num == a.numerator and den * den == a.denominator:
        return Fraction(num, den)
    return None


def _need_n(algebra: CliffordAlgebra, n: int):
    if algebra.n != n:
        raise DimensionMismatch(f"construction needs n = {n}, got {algebra}")


# -- J_3 ------------------------------------------------------------------

@dataclass(frozen=True)
class J3Params:
    a: object
    b: object
    c: object
    k: object
    l: object


def build_j3(algebra: CliffordAlgebra, params: J3Params) -> LinOperator:
    """R(1) = 0, R(e_1) = k w, R(e_2) = l w with w = a + b e_1 + c e_2."""
    _need_n(algebra, 2)
    ctx = algebra.ctx
    d1, d2 = algebra.form.d
    a, b, c, k, l = (ctx(x) for x in (params.a, params.b, params.c, params.k, params.l))
    norm = ctx.sub(ctx.mul(a, a), ctx.add(ctx.mul(d1, ctx.mul(b, b)), ctx.mul(d2, ctx.mul(c, c))))
    if norm != 0:
        raise ConstraintViolated(f"a^2 - d1 b^2 - d2 c^2 = {ctx.format(norm)} != 0")
    if ctx.add(ctx.mul(k, b), ctx.mul(l, c)) != 0:
        raise ConstraintViolated("k b + l c != 0")
    w = (a, b, c)
    return LinOperator.from_columns(algebra, [
        (0, 0, 0),
        tuple(ctx.mul(k, x) for x in w),
        tuple(ctx.mul(l, x) for x in w),
    ])


def solve_j3_params(algebra: CliffordAlgebra, height_bound: int = 1000):
    """Parameters giving a nonzero J_3 operator.

    Returns ``None`` if a^2 - d_1 b^2 - d_2 c^2 is anisotropic, or
    :data:`UNDECIDED` over Q when the bounded search gives up.
    """
    _need_n(algebra, 2)
    ctx = algebra.ctx
    d1, d2 = algebra.form.d
    w = isotropic_vector(DiagonalForm(ctx, (1, ctx.neg(d1), ctx.neg(d2))), height_bound)
    if w is None or w is UNDECIDED:
        return w
    a, b, c = w
    if b != 0:
        l = ctx.one
        k = ctx.neg(ctx.div(ctx.mul(l, c), b))
    else:
        k = ctx.one
        l = ctx.neg(ctx.div(ctx.mul(k, b), c))
    return J3Params(a, b, c, k, l)


# -- split family -------------------------------------------------------------

@dataclass(frozen=True)
class Example4Params:
    """Split 1 <= p < n; ``l`` = (l_1..l_p), ``k`` = (k_{p+1}..k_n)."""

    p: int
    l: tuple
    k: tuple


def build_example4(algebra: CliffordAlgebra, params: Example4Params) -> LinOperator:
    ctx = algebra.ctx
    d = algebra.form.d
    n, p = algebra.n, params.p
    if not 1 <= p < n or len(params.l) != p or len(params.k) != n - p:
        raise ConstraintViolated(f"bad split p={p} for n={n} (|l|={len(params.l)}, |k|={len(params.k)})")
    l = tuple(ctx(x) for x in params.l)
    k = tuple(ctx(x) for x in params.k)
    if ctx.dot(l, l, d[:p]) != ctx.one:
        raise ConstraintViolated("sum d_i l_i^2 != 1")
    if ctx.dot(k, k, d[p:]) != 0:
        raise ConstraintViolated("sum d_j k_j^2 != 0")
    if not any(k):
        raise ConstraintViolated("all k_j are zero")

    K = (ctx.zero,) + (ctx.zero,) * p + k          # sum k_j e_j
    L = (ctx.one,) + l + (ctx.zero,) * (n - p)     # 1 + sum l_i e_i
    cols = [K]
    for i in range(p):
        cols.append(tuple(ctx.mul(ctx.mul(d[i], l[i]), x) for x in K))
    for j in range(n - p):
        coef = ctx.neg(ctx.mul(d[p + j], k[j]))
        cols.append(tuple(ctx.mul(coef, x) for x in L))
    return LinOperator.from_columns(algebra, cols)


def auto_example4_params(algebra: CliffordAlgebra, p: int | None = None, height_bound: int = 1000):
    """Solve the two side conditions with the quadratic-form solvers.

    Tries the given split, or every split p = 1..n-2 in turn.  Returns
    ``None`` when no split works in the natural basis order.
    """
    ctx = algebra.ctx
    d = algebra.form.d
    n = algebra.n
    splits = [p] if p is not None else range(1, n - 1)
    for s in splits:
        if not 1 <= s < n:
            raise ConstraintViolated(f"bad split p={s} for n={n}")
        l = unit_representation(DiagonalForm(ctx, d[:s]), height_bound)
        if not l:
            continue
        k = isotropic_vector(DiagonalForm(ctx, d[s:]), height_bound) if n - s >= 2 else None
        if not k:
            continue
        return Example4Params(s, tuple(l), tuple(k))
    return None


# -- n = 3 family through x^2 + d_1 d_2 d_3 -----------------------------------

@dataclass(frozen=True)
class Example5Params:
    k: tuple
    x0: object


def build_example5(algebra: CliffordAlgebra, params: Example5Params) -> LinOperator:
    """The n = 3 operator written in the rescaled basis e_i' = e_i / (k_i d_i).

    Its last row is the cyclic R(e_3') = -1 + lam/(d_3 k_3^2) (e_1' - e_2'),
    with lam = k_1 k_2 k_3 x_0.  Everything is converted back to the e_i basis.
    """
    _need_n(algebra, 3)
    ctx = algebra.ctx
    d = algebra.form.d
    k = tuple(ctx(x) for x in params.k)
    x0 = ctx(params.x0)
    if len(k) != 3 or any(x == 0 for x in k):
        raise ConstraintViolated("need three nonzero k_i")
    if ctx.dot(k, k, d) != 0:
        raise ConstraintViolated("d_1 k_1^2 + d_2 k_2^2 + d_3 k_3^2 != 0")
    if ctx.add(ctx.mul(x0, x0), ctx.mul(d[0], ctx.mul(d[1], d[2]))) != 0:
        raise ConstraintViolated("x0^2 + d_1 d_2 d_3 != 0")
    lam = ctx.mul(ctx.mul(k[0], k[1]), ctx.mul(k[2], x0))
    scale = [ctx.mul(k[i], d[i]) for i in range(3)]            # e_i = scale_i * e_i'
    pattern = [(0, 1, -1), (-1, 0, 1), (1, -1, 0)]               # coefficients of e_1', e_2', e_3'

    cols = [(ctx.zero,) + k]
    for i in range(3):
        coef = ctx.div(lam, ctx.mul(d[i], ctx.mul(k[i], k[i])))
        # R(e_i') in e-coordinates: -1 + coef * sum_j pattern_ij e_j'
        prime_img = [ctx.neg(ctx.one)] + [ctx.div(ctx.mul(coef, ctx(s)), scale[j])
                                         for j, s in enumerate(pattern[i])]
        cols.append(tuple(ctx.mul(scale[i], x) for x in prime_img))
    return LinOperator.from_columns(algebra, cols)


def auto_example5_params(algebra: CliffordAlgebra):
    """Lexicographically smallest all-nonzero k and the smaller root x0, over Z_p."""
    _need_n(algebra, 3)
    ctx = algebra.ctx
    if not ctx.is_prime:
        raise UnsupportedField("automatic example5 parameters need a prime field")
    d = algebra.form.d
    x0 = sqrt_mod(ctx.neg(ctx.mul(d[0], ctx.mul(d[1], d[2]))), ctx)
    if x0 is None:
        return None
    for k in itertools.product(range(1, ctx.p), repeat=3):
        if ctx.dot(k, k, d) == 0:
            return Example5Params(k, x0)
    return None


# -- square-root operator ----------------------------------------------------

def build_bigc(algebra: CliffordAlgebra) -> LinOperator:
    """P(1) = e_2/s_2 + i e_3/s_3, P(e_1) = s_1 P(1), P(e_2) = -s_2 (1 + e_1/s_1),
    P(e_3) = -i s_3 (1 + e_1/s_1), where s_j^2 = d_j and i^2 = -1.
    """
    _need_n(algebra, 3)
    ctx = algebra.ctx
    roots = [field_sqrt(x, ctx) for x in algebra.form.d]
    i = field_sqrt(ctx.neg(ctx.one), ctx)
    missing = [f"sqrt(d_{j + 1})" for j, r in enumerate(roots) if r is None]
    if i is None:
        missing.append("sqrt(-1)")
    if missing:
        raise MissingRoots(f"missing in {ctx}: " + ", ".join(missing))
    s1, s2, s3 = roots
    zero = ctx.zero
    P1 = (zero, zero, ctx.inv(s2), ctx.div(i, s3))
    L = (ctx.one, ctx.inv(s1), zero, zero)
    return LinOperator.from_columns(algebra, [
        P1,
        tuple(ctx.mul(s1, x) for x in P1),
        tuple(ctx.mul(ctx.neg(s2), x) for x in L),
        tuple(ctx.mul(ctx.neg(ctx.mul(i, s3)), x) for x in L),
    ])


# -- fixtures and witness search -----------------------------------------------

def example6_operator() -> LinOperator:
    """The Z_7 operator on J_4(-1, -1, -1) given with columns R(1), R(e_1), R(e_2), R(e_3)."""
    alg = CliffordAlgebra.over(FieldCtx.prime(7), (-1, -1, -1))
    return LinOperator.from_columns(alg, [
        (0, 1, 2, 3),
        (1, 0, 4, 2),
        (2, 3, 0, 6),
        (3, 5, 1, 0),
    ])


def _inverse(perm):
    inv = [0] * len(perm)
    for new, old in enumerate(perm):
        inv[old] = new
    return inv


def find_witness(algebra: CliffordAlgebra, height_bound: int = 200):
    """Some RB-operator with R^2 != 0 built from the explicit families, or ``None``.

    Tries, in order: the split family on every reordering of the basis into
    (unit part, isotropic part), then the example5 and square-root operators
    on each triple of basis vectors, lifted to the whole algebra.
    """
    ctx = algebra.ctx
    d = algebra.form.d
    n = algebra.n
    idx = list(range(n))

    for size in range(1, n - 1):
        for head in itertools.combinations(idx, size):
            perm = list(head) + [j for j in idx if j not in head]
            alg = CliffordAlgebra(BilinearForm(ctx, tuple(d[j] for j in perm)))
            params = auto_example4_params(alg, size, height_bound)
            if params is not None:
                return permute_operator(build_example4(alg, params), _inverse(perm))

    for triple in itertools.combinations(range(1, n + 1), 3):
        sub = CliffordAlgebra(algebra.form.restrict(triple))
        P = None
        if ctx.is_prime:
            params = auto_example5_params(sub)
            if params is not None:
                P = build_example5(sub, params)
        if P is None:
            try:
                P = build_bigc(sub)
            except MissingRoots:
                continue
        return P if n == 3 else extend_by_zero(P, algebra, triple)
    return None
