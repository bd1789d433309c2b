"""Constructive solvers for diagonal quadratic forms.

Over ``Z_p`` every solver is a deterministic enumeration: the shortest
nonzero prefix is tried first (coordinates past it fixed to zero), and
inside a prefix the lexicographically smallest vector wins.  Over ``Q`` the
search is height-bounded and may end in :data:`UNDECIDED`; absence is
reported only when it is proved (a non-square ratio for two variables, a
definite form, or a local obstruction for three).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedField
from .scalars import FieldCtx, sqrt_mod

DEFAULT_HEIGHT_BOUND = 1000


class _Undecided:
    """Search exhausted its bound without deciding existence."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDECIDED"

    def __bool__(self):
        return False


UNDECIDED = _Undecided()


@dataclass(frozen=True)
class DiagonalForm:
    """The form sum(d_i x_i^2) with nonzero coefficients."""

    ctx: FieldCtx
    d: tuple

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(self.ctx(x) for x in self.d))
        if not self.d:
            raise ValueError("empty form")
        if any(x == 0 for x in self.d):
            raise ValueError(f"degenerate form {self.d}: zero coefficient")

    def __len__(self):
        return len(self.d)

    def value(self, x):
        if len(x) != len(self.d):
            raise ValueError("length mismatch")
        return self.ctx.dot(x, x, self.d)


def _require_solvable(ctx: FieldCtx):
    if ctx.is_symbolic:
        raise UnsupportedField(f"quadratic-form solving is not available over {ctx}")


# -- prime fields ------------------------------------------------------

def _solve_mod_p(ctx: FieldCtx, coeffs, target: int):
    """Smallest vector with sum(c_i x_i^2) = target, shortest prefix first.

    The zero vector is excluded.  For a prefix of length m the last
    coordinate is nonzero and solved from the square table.
    """
    p = ctx.p
    m = len(coeffs)
    for length in range(1, m + 1):
        head = coeffs[: length - 1]
        last_inv = pow(coeffs[length - 1], -1, p)
        for xs in itertools.product(range(p), repeat=length - 1):
            rest = (target - sum(c * x * x for c, x in zip(head, xs))) * last_inv % p
            if rest == 0:
                continue
            root = sqrt_mod(rest, ctx)
            if root is not None:
                return tuple(xs) + (root,) + (0,) * (m - length)
    return None


# -- rationals ---------------------------------------------------------

def _integral(coeffs) -> list[int]:
    den = math.lcm(*(Fraction(c).denominator for c in coeffs))
    return [int(Fraction(c) * den) for c in coeffs]


def _rat_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def _ordered_range(h: int):
    """0, 1, -1, 2, -2, ... up to height h (the canonical rational order on integers)."""
    yield 0
    for k in range(1, h + 1):
        yield k
        yield -k


def _shell(length: int, h: int):
    """Integer tuples of the given length with max |x_i| == h."""
    for xs in itertools.product(_ordered_range(h), repeat=length):
        if max((abs(x) for x in xs), default=0) == h:
            yield xs


def _int_key(xs):
    return tuple((abs(x), x < 0) for x in xs)


def _prime_factors(n: int) -> set[int]:
    n, out, q = abs(n), set(), 2
    while q * q <= n:
        while n % q == 0:
            out.add(q)
            n //= q
        q += 1
    if n > 1:
        out.add(n)
    return out


def _hilbert(a: int, b: int, p: int) -> int:
    """Hilbert symbol (a, b)_p for nonzero integers; p = 0 stands for the real place."""
    if p == 0:
        return -1 if a < 0 and b < 0 else 1
    alpha = beta = 0
    while a % p == 0:
        a //= p
        alpha += 1
    while b % p == 0:
        b //= p
        beta += 1
    if p == 2:
        eps = lambda u: (u - 1) // 2 % 2
        omega = lambda u: (u * u - 1) // 8 % 2
        e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a)
        return -1 if e % 2 else 1
    leg = lambda u: 1 if pow(u % p, (p - 1) // 2, p) == 1 else -1
    sign = -1 if (alpha * beta * (p - 1) // 2) % 2 else 1
    return sign * leg(a) ** beta * leg(b) ** alpha


def _ternary_isotropic(c) -> bool:
    """Whether c1 x^2 + c2 y^2 + c3 z^2 has a rational zero (local test at every relevant place)."""
    a, b = -c[0] * c[2], -c[1] * c[2]
    places = {0, 2} | _prime_factors(c[0] * c[1] * c[2])
    return all(_hilbert(a, b, p) == 1 for p in places)


def _isotropic_q(coeffs, bound: int):
    m = len(coeffs)
    c = _integral(coeffs)
    definite = all(x > 0 for x in c) or all(x < 0 for x in c)
    for length in range(2, m + 1):
        if length == 2:
            # c1 x^2 + c2 y^2 = 0 has a nonzero solution iff -c1/c2 is a square
            r = _rat_sqrt(Fraction(-c[0], c[1]))
            if r is None:
                continue
            found = (r.denominator, r.numerator)
        elif definite:
            return None  # positive or negative definite: no real zero, so none over Q
        elif length == 3 and not _ternary_isotropic(c[:3]):
            continue
        else:
            found = _prefix_search(c[:length], bound)
            if found is None:
                continue
        return tuple(Fraction(x) for x in found) + (Fraction(0),) * (m - length)
    if m == 3 and not _ternary_isotropic(c):
        return None
    return UNDECIDED if m >= 3 else None


def _prefix_search(c, bound: int):
    """Primitive integer zero of sum(c_i x_i^2) with positive last coordinate.

    Free coordinates are walked shell by shell (by max |x_i|); the last one is
    solved exactly.  The first shell that yields a solution of height h means
    only shells up to h need visiting.  Returns the solution of least height,
    ties broken by the canonical order 0, 1, -1, 2, ...
    """
    free = len(c) - 1
    max_points = (2 * bound + 1) ** 2
    best, best_key = None, None
    visited = 0
    for h in range(bound + 1):
        if best_key is not None and h > best_key[0]:
            break
        for xs in _shell(free, h):
            visited += 1
            if visited > max_points:
                return best
            rest = -sum(ci * x * x for ci, x in zip(c, xs))
            if rest % c[-1]:
                continue
            sq = rest // c[-1]
            if sq <= 0:
                continue
            root = math.isqrt(sq)
            if root * root != sq or root > bound:
                continue
            cand = tuple(xs) + (root,)
            g = math.gcd(*cand)
            cand = tuple(x // g for x in cand)
            key = (max(abs(x) for x in cand), _int_key(cand))
            if best_key is None or key < best_key:
                best, best_key = cand, key
    return best


def _unit_q(coeffs, bound: int):
    m = len(coeffs)
    if all(Fraction(x) < 0 for x in coeffs):
        return None
    undecided = m >= 3
    for length in range(1, m + 1):
        head = [Fraction(x) for x in coeffs[:length]]
        if length == 1:
            r = _rat_sqrt(1 / head[0])
            if r is None:
                continue
            sol = (r,)
        else:
            # sum d_i l_i^2 = 1  <=>  sum d_i x_i^2 - z^2 = 0 with z > 0, l = x / z
            c = _integral(head + [Fraction(-1)])
            if length == 2 and not _ternary_isotropic(c):
                continue
            found = _prefix_search(c, bound)
            if found is None:
                undecided = True
                continue
            sol = tuple(Fraction(x, found[-1]) for x in found[:-1])
        return sol + (Fraction(0),) * (m - length)
    return UNDECIDED if undecided else None


# -- public API --------------------------------------------------------

def isotropic_vector(form: DiagonalForm, height_bound: int = DEFAULT_HEIGHT_BOUND):
    """Nonzero x with sum(d_i x_i^2) = 0.

    Returns a tuple, ``None`` when no solution exists, or :data:`UNDECIDED`
    over ``Q`` when the bounded search is inconclusive.  Over ``Z_p`` with
    three or more variables a solution always exists.
    """
    ctx = form.ctx
    _require_solvable(ctx)
    if ctx.is_prime:
        return _solve_mod_p(ctx, form.d, 0)
    return _isotropic_q(form.d, height_bound)


def represent(a, b, c, ctx: FieldCtx):
    """(x, y) with a x^2 + b y^2 = c over ``Z_p``; a, b, c nonzero."""
    if not ctx.is_prime:
        raise UnsupportedField(f"represent works over prime fields, got {ctx}")
    a, b, c = ctx(a), ctx(b), ctx(c)
    if 0 in (a, b, c):
        raise ValueError("coefficients must be nonzero")
    # allow x = 0 as well: search (x, y) lexicographically, not by prefix
    for x in range(ctx.p):
        rest = (c - a * x * x) * pow(b, -1, ctx.p) % ctx.p
        y = sqrt_mod(rest, ctx)
        if y is not None:
            return (x, y)
    return None


def unit_representation(form: DiagonalForm, height_bound: int = DEFAULT_HEIGHT_BOUND):
    """l with sum(d_i l_i^2) = 1, shortest prefix first.

    Over ``Z_p`` a one-term prefix succeeds iff 1/d_1 is a square, and any two
    terms always represent 1.
    """
    ctx = form.ctx
    _require_solvable(ctx)
    if ctx.is_prime:
        m = len(form.d)
        inv = pow(form.d[0], -1, ctx.p)
        root = sqrt_mod(inv, ctx)
        if root is not None:
            return (root,) + (0,) * (m - 1)
        if m == 1:
            return None
        x, y = represent(form.d[0], form.d[1], 1, ctx)
        return (x, y) + (0,) * (m - 2)
    return _unit_q(form.d, height_bound)
