"""Linear operators on J_{n+1}(f) and the Rota-Baxter identity.

An operator is stored as a dense matrix in the basis (1, e_1, ..., e_n);
column j holds the coordinates of R(b_j).  The weight-lambda identity is

    R(x) R(y) = R(R(x) y + x R(y) + lambda x y)

and, being bilinear in (x, y), it suffices to check it on basis pairs.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

from .errors import DimensionMismatch, HypothesisViolated, NotApplicable, ParseError
from .jordan import AlgebraElement, BilinearForm, CliffordAlgebra, product
from .scalars import FieldCtx, sqrt_mod


@dataclass(frozen=True)
class LinOperator:
    algebra: CliffordAlgebra
    matrix: tuple

    def __post_init__(self):
        ctx = self.algebra.ctx
        dim = self.algebra.dim
        rows = tuple(tuple(ctx(x) for x in row) for row in self.matrix)
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise DimensionMismatch(f"{self.algebra} needs a {dim}x{dim} matrix")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def from_columns(cls, algebra: CliffordAlgebra, columns) -> "LinOperator":
        cols = [c.coords if isinstance(c, AlgebraElement) else tuple(c) for c in columns]
        if len(cols) != algebra.dim:
            raise DimensionMismatch(f"expected {algebra.dim} columns, got {len(cols)}")
        return cls(algebra, tuple(zip(*cols)))

    @classmethod
    def zero(cls, algebra: CliffordAlgebra) -> "LinOperator":
        return cls(algebra, ((0,) * algebra.dim,) * algebra.dim)

    @classmethod
    def identity(cls, algebra: CliffordAlgebra) -> "LinOperator":
        dim = algebra.dim
        return cls(algebra, tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))

    @property
    def ctx(self) -> FieldCtx:
        return self.algebra.ctx

    def column(self, j: int) -> AlgebraElement:
        return self.algebra.from_coords([row[j] for row in self.matrix])

    @property
    def columns(self) -> list:
        return [self.column(j) for j in range(self.algebra.dim)]

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        return apply(self, x)

    def compose(self, other: "LinOperator") -> "LinOperator":
        """The operator ``self o other``."""
        if other.algebra != self.algebra:
            raise DimensionMismatch("operators on different algebras")
        ctx = self.ctx
        cols = list(zip(*other.matrix))
        return LinOperator(self.algebra, tuple(
            tuple(ctx.dot(row, col) for col in cols) for row in self.matrix))

    def power(self, s: int) -> "LinOperator":
        result = LinOperator.identity(self.algebra)
        for _ in range(s):
            result = self.compose(result)
        return result

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.matrix)

    def rank(self) -> int:
        return _rank(self.ctx, [list(r) for r in self.matrix])

    def __str__(self):
        return format_operator(self)


def apply(R: LinOperator, x: AlgebraElement) -> AlgebraElement:
    if x.algebra != R.algebra:
        raise DimensionMismatch(f"{x.algebra} vs {R.algebra}")
    coords = x.coords
    return R.algebra.from_coords([R.ctx.dot(row, coords) for row in R.matrix])


def _rank(ctx: FieldCtx, rows) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = ctx.inv(rows[rank][c])
        rows[rank] = [ctx.mul(inv, x) for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def in_image(R: LinOperator, x: AlgebraElement) -> bool:
    """Whether R(y) = x is solvable."""
    augmented = [list(row) + [c] for row, c in zip(R.matrix, x.coords)]
    return _rank(R.ctx, augmented) == R.rank()


# -- the identity -------------------------------------------------------

@dataclass
class LemmaFlags:
    """Outcome of each structural diagnostic.

    ``True`` = holds, ``False`` = violated, ``None`` = hypothesis not met.
    """

    lemma1_a: Optional[bool] = None
    lemma1_b: Optional[bool] = None
    lemma1_c: Optional[bool] = None
    lemma1_d: Optional[bool] = None
    lemma3_a: Optional[bool] = None
    lemma3_b: Optional[bool] = None
    lemma3_c: Optional[bool] = None
    lemma3_d: Optional[bool] = None
    lemma3_e: Optional[bool] = None
    remark2: Optional[bool] = None

    def violations(self) -> list[str]:
        return [k for k, v in asdict(self).items() if v is False]

    @property
    def all_pass(self) -> bool:
        return not self.violations()


@dataclass
class RBReport:
    is_rb: bool
    weight: object
    failing_pairs: list = field(default_factory=list)
    nilpotency_index: Optional[int] = None
    lemma_flags: LemmaFlags = field(default_factory=LemmaFlags)

    def to_dict(self, ctx: FieldCtx | None = None) -> dict:
        return {
            "is_rb": self.is_rb,
            "weight": ctx.format(self.weight) if ctx else str(self.weight),
            "failing_pairs": [list(p) for p in self.failing_pairs],
            "nilpotency_index": self.nilpotency_index,
            "lemma_flags": asdict(self.lemma_flags),
        }


def rb_residual(R: LinOperator, x: AlgebraElement, y: AlgebraElement, weight=0) -> AlgebraElement:
    """R(x)R(y) - R(R(x)y + xR(y) + weight*xy)."""
    Rx, Ry = R(x), R(y)
    inner = product(Rx, y) + product(x, Ry)
    if weight:
        inner = inner + product(x, y).scale(weight)
    return product(Rx, Ry) - R(inner)


def check_rb(R: LinOperator, weight=0) -> RBReport:
    weight = R.ctx(weight)
    basis = R.algebra.basis_elements()
    failing = [(i, j) for i, x in enumerate(basis) for j, y in enumerate(basis)
               if not rb_residual(R, x, y, weight).is_zero()]
    return RBReport(
        is_rb=not failing,
        weight=weight,
        failing_pairs=failing,
        nilpotency_index=nilpotency_index(R),
        lemma_flags=lemma_diagnostics(R),
    )


def nilpotency_index(R: LinOperator) -> Optional[int]:
    """Smallest s >= 1 with R^s = 0, searched up to s = n + 2."""
    power = R
    for s in range(1, R.algebra.n + 3):
        if power.is_zero():
            return s
        power = R.compose(power)
    return None


# -- diagnostics ---------------------------------------------------------

def lemma_diagnostics(R: LinOperator) -> LemmaFlags:
    """Evaluate the structural consequences of the weight-0 identity.

    Only meaningful for a verified weight-0 RB-operator; on anything else the
    flags are informative but carry no guarantee.
    """
    alg = R.algebra
    ctx = alg.ctx
    form = alg.form
    n = alg.n
    one = alg.one()
    flags = LemmaFlags()

    R1 = R(one)
    R2 = R.compose(R)
    flags.lemma1_a = not in_image(R, one)
    flags.lemma1_b = alg.dim - R.rank() >= 2
    flags.lemma1_d = product(R1, R1) == R2(one).scale(2)
    if not any(R1.v):
        # R(1) is a scalar
        flags.lemma1_c = R1.is_zero() and R2.is_zero()
    try:
        flags.remark2 = check_remark2(R)
    except NotApplicable:
        flags.remark2 = None

    if R1.is_zero():
        return flags

    k = R1.v
    flags.lemma3_a = (R1.alpha == 0 and product(R1, R1).is_zero()
                      and R2(one).is_zero() and form.pair(k, k) == 0)
    cols = [R.column(i) for i in range(1, n + 1)]
    ok_b = ok_c = ok_d = ok_e = True
    for i, Ri in enumerate(cols):
        a0, a = Ri.alpha, Ri.v
        ok_b &= product(R1, Ri) == R1.scale(a0) and form.pair(k, a) == 0
        coeff = ctx.sub(a0, ctx.mul(form.d[i], k[i]))
        ok_c &= R2.column(i + 1) == R1.scale(coeff)
        ok_e &= (product(Ri, Ri) == Ri.scale(ctx.add(a0, a0))
                 and form.pair(a, a) == ctx.mul(a0, a0) and a[i] == 0)
        for j in range(i + 1, n):
            Rj = cols[j]
            b0, b = Rj.alpha, Rj.v
            ok_d &= (product(Ri, Rj) == Rj.scale(a0) + Ri.scale(b0)
                     and form.pair(a, b) == ctx.mul(a0, b0)
                     and ctx.add(ctx.mul(form.d[j], a[j]), ctx.mul(form.d[i], b[i])) == 0)
    flags.lemma3_b, flags.lemma3_c = ok_b, ok_c
    flags.lemma3_d, flags.lemma3_e = ok_d, ok_e
    return flags


def check_remark2(R: LinOperator) -> bool:
    """Skew-symmetry of the V-block after rescaling e_i' = e_i / sqrt(d_i).

    Needs R^2 != 0 and a square root of every d_i; raises
    :class:`NotApplicable` otherwise.
    """
    ctx = R.ctx
    if R.compose(R).is_zero():
        raise NotApplicable("R^2 = 0")
    if not ctx.is_prime:
        raise NotApplicable(f"square roots are only computed over prime fields, not {ctx}")
    roots = [sqrt_mod(d, ctx) for d in R.algebra.form.d]
    if any(r is None for r in roots):
        raise NotApplicable("some d_i is not a square")
    n = R.algebra.n
    # entry (i, j) of the rescaled block is s_i * A_ij / s_j
    block = [[ctx.div(ctx.mul(roots[i], R.matrix[i + 1][j + 1]), roots[j]) for j in range(n)]
             for i in range(n)]
    return all(ctx.add(block[i][j], block[j][i]) == 0 for i in range(n) for j in range(i, n))


# -- extension by zero -------------------------------------------------------

def extend_by_zero(P: LinOperator, algebra: CliffordAlgebra, split) -> LinOperator:
    """Lift P on B = span(1, e_i : i in split) to R(b + c) = P(b).

    ``split`` lists the 1-based indices of the e_i spanning B, in the order
    matching P's basis.  The containment BC, CB in ker P + C is checked
    directly on basis products.
    """
    split = list(split)
    if len(set(split)) != len(split) or not all(1 <= i <= algebra.n for i in split):
        raise ValueError(f"bad split {split} for n={algebra.n}")
    if P.algebra.form != algebra.form.restrict(split):
        raise DimensionMismatch("P's algebra is not the subalgebra selected by split")
    if not check_rb(P).is_rb:
        raise HypothesisViolated("P is not a weight-0 RB-operator on B")
    ctx = algebra.ctx
    embed = [0] + split
    complement = [j for j in range(1, algebra.n + 1) if j not in split]
    sub = P.algebra

    for b_sub, b_full in enumerate(embed):
        for c in complement:
            for prod in (product(algebra.basis(b_full), algebra.basis(c)),
                         product(algebra.basis(c), algebra.basis(b_full))):
                b_part = sub.from_coords([prod.coords[i] for i in embed])
                if not P(b_part).is_zero():
                    raise HypothesisViolated(
                        f"product of b_{b_full} and e_{c} has B-part outside ker P")

    dim = algebra.dim
    M = [[ctx.zero] * dim for _ in range(dim)]
    for r_sub, r_full in enumerate(embed):
        for c_sub, c_full in enumerate(embed):
            M[r_full][c_full] = P.matrix[r_sub][c_sub]
    R = LinOperator(algebra, M)
    if not check_rb(R).is_rb:
        raise HypothesisViolated("extension failed the RB identity")
    return R


def permute_operator(R: LinOperator, perm) -> LinOperator:
    """Transport R along the isomorphism J(f) -> J(f o perm).

    ``perm[i]`` (0-based over e_1..e_n) names the old index that becomes the
    new e_{i+1}.  The returned operator lives on J(d_perm[0], ..., d_perm[n-1]).
    """
    d = R.algebra.form.d
    new_alg = CliffordAlgebra(BilinearForm(R.ctx, tuple(d[i] for i in perm)))
    idx = [0] + [i + 1 for i in perm]
    M = [[R.matrix[idx[r]][idx[c]] for c in range(len(idx))] for r in range(len(idx))]
    return LinOperator(new_alg, M)


# -- file format -----------------------------------------------------------

def format_operator(R: LinOperator) -> str:
    ctx = R.ctx
    lines = [f"field {ctx}", f"form {R.algebra.form.format()}"]
    lines += [",".join(ctx.format(x) for x in row) for row in R.matrix]
    return "\n".join(lines) + "\n"


def parse_operator(text: str) -> LinOperator:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 2 or not lines[0].startswith("field ") or not lines[1].startswith("form "):
        raise ParseError("operator file must start with 'field <descriptor>' and 'form d1,...,dn'")
    try:
        ctx = FieldCtx.parse(lines[0][6:])
        alg = CliffordAlgebra(BilinearForm.parse(ctx, lines[1][5:]))
        rows = [[ctx.parse_scalar(t) for t in ln.split(",")] for ln in lines[2:]]
        return LinOperator(alg, rows)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def read_operator(path) -> LinOperator:
    with open(path) as fh:
        return parse_operator(fh.read())


def write_operator(R: LinOperator, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_operator(R))
