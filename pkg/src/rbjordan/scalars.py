"""Exact scalar arithmetic over odd prime fields and the rationals.

Scalars are plain Python values owned by a :class:`FieldCtx`:

* ``Zp:p``  -> ``int`` residues in ``[0, p)``
* ``Q``     -> :class:`fractions.Fraction` (always reduced, positive denominator)

The two symbolic descriptors ``R`` and ``Cbar`` carry no arithmetic at all.
They exist so the nilpotency-index case table can be asked about the reals
and algebraically closed fields; entries of a form over them are stored as
rationals and only their signs are ever inspected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator

from .errors import DivisionByZero, MixedFields, ParseError, UnsupportedField

PRIME = "Zp"
RATIONALS = "Q"
REAL = "R"
ALGCLOSED = "Cbar"

MAX_PRIME = 97


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class FieldCtx:
    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == PRIME:
            if not isinstance(self.p, int) or not _is_prime(self.p) or self.p == 2:
                raise UnsupportedField(f"need an odd prime, got p={self.p!r}")
            if self.p > MAX_PRIME:
                raise UnsupportedField(f"p={self.p} exceeds the supported bound {MAX_PRIME}")
        elif self.kind in (RATIONALS, REAL, ALGCLOSED):
            if self.p is not None:
                raise UnsupportedField(f"{self.kind} takes no modulus")
        else:
            raise UnsupportedField(f"unknown field kind {self.kind!r}")

    # -- construction -------------------------------------------------

    @classmethod
    def prime(cls, p: int) -> "FieldCtx":
        return cls(PRIME, p)

    @classmethod
    def rationals(cls) -> "FieldCtx":
        return cls(RATIONALS)

    @classmethod
    def real(cls) -> "FieldCtx":
        return cls(REAL)

    @classmethod
    def algclosed(cls) -> "FieldCtx":
        return cls(ALGCLOSED)

    @classmethod
    def parse(cls, text: str) -> "FieldCtx":
        """Parse a descriptor: ``Zp:7``, ``Q``, ``R`` or ``Cbar`` (case-sensitive)."""
        text = text.strip()
        if text in (RATIONALS, REAL, ALGCLOSED):
            return cls(text)
        if text.startswith("Zp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ParseError(f"bad prime in field descriptor {text!r}") from None
            return cls.prime(p)
        raise ParseError(f"unknown field descriptor {text!r}")

    def __str__(self):
        return f"Zp:{self.p}" if self.kind == PRIME else self.kind

    # -- classification -----------------------------------------------

    @property
    def is_prime(self) -> bool:
        return self.kind == PRIME

    @property
    def is_symbolic(self) -> bool:
        return self.kind in (REAL, ALGCLOSED)

    def _require_arith(self):
        if self.is_symbolic:
            raise UnsupportedField(f"no element arithmetic over symbolic field {self}")

    def _require_prime(self):
        if not self.is_prime:
            raise UnsupportedField(f"operation needs a prime field, got {self}")

    # -- elements -----------------------------------------------------

    def __call__(self, value) -> int | Fraction:
        """Coerce an int, Fraction or string into a canonical element."""
        if isinstance(value, str):
            return self.parse_scalar(value)
        if self.is_prime:
            if isinstance(value, Fraction):
                return self.div(value.numerator % self.p, value.denominator % self.p)
            if isinstance(value, int):
                return value % self.p
        else:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
        raise MixedFields(f"cannot interpret {value!r} in {self}")

    def check(self, a) -> None:
        """Raise :class:`MixedFields` unless ``a`` is a canonical element."""
        if self.is_prime:
            if type(a) is int and 0 <= a < self.p:
                return
        elif type(a) is Fraction:
            return
        raise MixedFields(f"{a!r} is not a canonical element of {self}")

    @property
    def zero(self):
        return 0 if self.is_prime else Fraction(0)

    @property
    def one(self):
        return 1 if self.is_prime else Fraction(1)

    def elements(self) -> Iterator[int]:
        """All residues in canonical order (prime fields only)."""
        self._require_prime()
        return iter(range(self.p))

    @cached_property
    def squares(self) -> dict[int, int]:
        """Map each square residue to its smaller root."""
        self._require_prime()
        table: dict[int, int] = {}
        for r in range(self.p // 2 + 1):
            table.setdefault(r * r % self.p, r)
        return table

    # -- arithmetic ---------------------------------------------------

    def add(self, a, b):
        self._require_arith()
        return (a + b) % self.p if self.is_prime else a + b

    def sub(self, a, b):
        self._require_arith()
        return (a - b) % self.p if self.is_prime else a - b

    def mul(self, a, b):
        self._require_arith()
        return a * b % self.p if self.is_prime else a * b

    def neg(self, a):
        self._require_arith()
        return -a % self.p if self.is_prime else -a

    def inv(self, a):
        self._require_arith()
        if a == 0:
            raise DivisionByZero(f"inverse of zero in {self}")
        return pow(a, -1, self.p) if self.is_prime else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def arith(self, a, b, op: str):
        """Checked binary operation; ``op`` is one of ``+ - * /``."""
        self._require_arith()
        self.check(a)
        self.check(b)
        try:
            fn = {"+": self.add, "-": self.sub, "*": self.mul, "/": self.div}[op]
        except KeyError:
            raise ValueError(f"unknown operator {op!r}") from None
        return fn(a, b)

    def dot(self, xs, ys, weights=None):
        if weights is None:
            total = sum(x * y for x, y in zip(xs, ys))
        else:
            total = sum(w * x * y for w, x, y in zip(weights, xs, ys))
        return total % self.p if self.is_prime else Fraction(total)

    # -- text ---------------------------------------------------------

    def parse_scalar(self, text: str):
        text = text.strip()
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad scalar {text!r}") from None
        if self.is_prime:
            if value.denominator % self.p == 0:
                raise ParseError(f"{text!r} has no image in {self}")
            return self(value)
        return value

    def format(self, a) -> str:
        if self.is_prime:
            return str(a)
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def sort_key(self, a):
        """Canonical ordering: residues ascending; rationals 0, 1, -1, 1/2, -1/2, 2, ...

        Rationals are ordered by height max(|num|, den) first, then by
        magnitude, then positive before negative.
        """
        if self.is_prime:
            return a
        a = Fraction(a)
        return (max(abs(a.numerator), a.denominator), abs(a), a < 0)


def legendre(a, ctx: FieldCtx) -> int:
    """Legendre symbol (a / p): +1, 0 or -1."""
    ctx._require_prime()
    a = ctx(a)
    if a == 0:
        return 0
    return 1 if a in ctx.squares else -1


def sqrt_mod(a, ctx: FieldCtx) -> int | None:
    """Smaller square root of ``a`` in ``Z_p``, or ``None`` for a nonresidue."""
    ctx._require_prime()
    return ctx.squares.get(ctx(a))


def p_mod4_class(ctx: FieldCtx) -> int:
    ctx._require_prime()
    return ctx.p % 4
