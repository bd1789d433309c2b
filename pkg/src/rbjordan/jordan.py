"""The Jordan algebra J_{n+1}(f) = F*1 + V of a diagonal bilinear form.

Product: (a + v)(b + u) = (ab + f(v, u)) * 1 + (a u + b v).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, MixedFields, ParseError, UnsupportedField
from .quadform import DiagonalForm
from .scalars import FieldCtx

MAX_N = 16


class BilinearForm(DiagonalForm):
    """Diagonal symmetric form f = (d_1, ..., d_n)."""

    def pair(self, v, u):
        """(v, u) = sum d_i v_i u_i."""
        if len(v) != len(self.d) or len(u) != len(self.d):
            raise DimensionMismatch(f"vectors of length {len(v)}, {len(u)} for n={len(self.d)}")
        return self.ctx.dot(v, u, self.d)

    @classmethod
    def parse(cls, ctx: FieldCtx, text: str) -> "BilinearForm":
        try:
            return cls(ctx, tuple(ctx.parse_scalar(t) for t in text.split(",")))
        except ValueError as exc:
            raise ParseError(f"bad form {text!r}: {exc}") from None

    def format(self) -> str:
        return ",".join(self.ctx.format(x) for x in self.d)

    def restrict(self, indices) -> "BilinearForm":
        """Form on the span of e_i, i in ``indices`` (1-based)."""
        return BilinearForm(self.ctx, tuple(self.d[i - 1] for i in indices))


def bilinear(v, u, form: BilinearForm):
    return form.pair(v, u)


@dataclass(frozen=True)
class CliffordAlgebra:
    form: BilinearForm

    def __post_init__(self):
        if self.form.ctx.is_symbolic:
            raise UnsupportedField(f"cannot build an algebra over symbolic field {self.form.ctx}")
        if not 2 <= self.n <= MAX_N:
            raise ValueError(f"need 2 <= n <= {MAX_N}, got n={self.n}")

    @classmethod
    def over(cls, ctx: FieldCtx, d) -> "CliffordAlgebra":
        return cls(BilinearForm(ctx, tuple(d)))

    @property
    def ctx(self) -> FieldCtx:
        return self.form.ctx

    @property
    def n(self) -> int:
        return len(self.form.d)

    @property
    def dim(self) -> int:
        return self.n + 1

    def __repr__(self):
        return f"J_{self.dim}({self.form.format()} over {self.ctx})"

    # -- elements -----------------------------------------------------

    def element(self, alpha, v=None) -> "AlgebraElement":
        ctx = self.ctx
        v = (0,) * self.n if v is None else v
        if len(v) != self.n:
            raise DimensionMismatch(f"expected {self.n} coordinates, got {len(v)}")
        return AlgebraElement(self, ctx(alpha), tuple(ctx(x) for x in v))

    def from_coords(self, coords) -> "AlgebraElement":
        """Element from its coordinates in the basis (1, e_1, ..., e_n)."""
        return self.element(coords[0], coords[1:])

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def basis(self, i: int) -> "AlgebraElement":
        """b_0 = 1, b_i = e_i."""
        coords = [0] * self.dim
        coords[i] = 1
        return self.from_coords(coords)

    def basis_elements(self):
        return [self.basis(i) for i in range(self.dim)]

    def parse_element(self, text: str) -> "AlgebraElement":
        """Parse ``"alpha; v1,...,vn"``."""
        try:
            head, _, tail = text.partition(";")
            alpha = self.ctx.parse_scalar(head)
            v = tuple(self.ctx.parse_scalar(t) for t in tail.split(",")) if tail.strip() else ()
        except ValueError as exc:
            raise ParseError(f"bad element {text!r}: {exc}") from None
        return self.element(alpha, v)


@dataclass(frozen=True)
class AlgebraElement:
    algebra: CliffordAlgebra
    alpha: object
    v: tuple

    @property
    def coords(self) -> tuple:
        return (self.alpha,) + self.v

    def _same(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.algebra != self.algebra:
            if other.algebra.ctx != self.algebra.ctx:
                raise MixedFields(f"{self.algebra.ctx} vs {other.algebra.ctx}")
            raise DimensionMismatch(f"{self.algebra} vs {other.algebra}")
        return other

    def __add__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        ctx = self.algebra.ctx
        return AlgebraElement(self.algebra, ctx.add(self.alpha, other.alpha),
                              tuple(ctx.add(a, b) for a, b in zip(self.v, other.v)))

    def __neg__(self):
        ctx = self.algebra.ctx
        return AlgebraElement(self.algebra, ctx.neg(self.alpha), tuple(ctx.neg(a) for a in self.v))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        ctx = self.algebra.ctx
        c = ctx(c)
        return AlgebraElement(self.algebra, ctx.mul(c, self.alpha), tuple(ctx.mul(c, a) for a in self.v))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def is_zero(self) -> bool:
        return self.alpha == 0 and not any(self.v)

    def __str__(self):
        ctx = self.algebra.ctx
        return f"{ctx.format(self.alpha)}; " + ",".join(ctx.format(a) for a in self.v)


def product(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._same(y)
    alg = x.algebra
    ctx = alg.ctx
    scalar = ctx.add(ctx.mul(x.alpha, y.alpha), alg.form.pair(x.v, y.v))
    vec = tuple(ctx.add(ctx.mul(x.alpha, u), ctx.mul(y.alpha, w)) for w, u in zip(x.v, y.v))
    return AlgebraElement(alg, scalar, vec)


def trace_norm(x: AlgebraElement):
    """(t, n) with x^2 - t x + n 1 = 0: t = 2 alpha, n = alpha^2 - (v, v)."""
    alg = x.algebra
    ctx = alg.ctx
    t = ctx.add(x.alpha, x.alpha)
    norm = ctx.sub(ctx.mul(x.alpha, x.alpha), alg.form.pair(x.v, x.v))
    return t, norm
