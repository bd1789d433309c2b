import itertools
import math
from fractions import Fraction

import pytest

from rbjordan.errors import UnsupportedField
from rbjordan.quadform import UNDECIDED, DiagonalForm, isotropic_vector, represent, unit_representation
from rbjordan.scalars import FieldCtx, legendre

F = Fraction


def all_solutions(p, d, target):
    return [x for x in itertools.product(range(p), repeat=len(d))
            if any(x) and sum(di * xi * xi for di, xi in zip(d, x)) % p == target % p]


def test_isotropic_examples():
    q = FieldCtx.rationals()
    assert isotropic_vector(DiagonalForm(q, (1, 1, -2))) == (1, 1, 1)
    x = isotropic_vector(DiagonalForm(FieldCtx.prime(5), (1, 1, 1)))
    assert sum(v * v for v in x) % 5 == 0 and any(x)
    assert x == (1, 2, 0)
    assert isotropic_vector(DiagonalForm(FieldCtx.prime(3), (1, 1))) is None


def test_represent_examples():
    assert represent(1, 1, 2, FieldCtx.prime(5)) == (1, 1)
    assert represent(1, 1, 1, FieldCtx.prime(3)) in {(1, 0), (0, 1)}
    x, y = represent(2, 3, 1, FieldCtx.prime(7))
    assert (2 * x * x + 3 * y * y) % 7 == 1
    assert (x, y) == min(s for s in all_solutions(7, (2, 3), 1))   # lexicographic choice


def test_unit_examples():
    z7, z5 = FieldCtx.prime(7), FieldCtx.prime(5)
    assert unit_representation(DiagonalForm(z7, (1,))) == (1,)
    assert unit_representation(DiagonalForm(z5, (3,))) is None
    l1, l2 = unit_representation(DiagonalForm(z7, (2, 3)))
    assert (2 * l1 * l1 + 3 * l2 * l2) % 7 == 1


def test_symbolic_rejected():
    with pytest.raises(UnsupportedField):
        isotropic_vector(DiagonalForm(FieldCtx.real(), (1, -1, 1)))
    with pytest.raises(UnsupportedField):
        represent(1, 1, 1, FieldCtx.rationals())


def test_degenerate_form_rejected():
    with pytest.raises(ValueError):
        DiagonalForm(FieldCtx.prime(5), (1, 5, 1))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_ternary_always_isotropic(p):
    ctx = FieldCtx.prime(p)
    for d in itertools.product(range(1, p), repeat=3):
        x = isotropic_vector(DiagonalForm(ctx, d))
        assert x is not None and any(x)
        assert sum(di * xi * xi for di, xi in zip(d, x)) % p == 0
        assert all_solutions(p, d, 0)   # enumeration agrees that one exists


@pytest.mark.parametrize("p", [3, 5, 7])
def test_represent_never_absent(p):
    ctx = FieldCtx.prime(p)
    for a, b, c in itertools.product(range(1, p), repeat=3):
        x, y = represent(a, b, c, ctx)
        assert (a * x * x + b * y * y) % p == c


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_binary_criterion(p):
    ctx = FieldCtx.prime(p)
    for d1, d2 in itertools.product(range(1, p), repeat=2):
        by_enum = bool(all_solutions(p, (d1, d2), 0))
        assert (isotropic_vector(DiagonalForm(ctx, (d1, d2))) is not None) == by_enum
        assert by_enum == (legendre(-d1 * d2, ctx) == 1)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_unit_representation_matches_enumeration(p):
    ctx = FieldCtx.prime(p)
    for m in (1, 2, 3):
        for d in itertools.product(range(1, p), repeat=m):
            l = unit_representation(DiagonalForm(ctx, d))
            exists = bool(all_solutions(p, d, 1))
            assert (l is not None) == exists
            if l is not None:
                assert sum(di * li * li for di, li in zip(d, l)) % p == 1


def test_long_forms_reduce_to_a_prefix():
    ctx = FieldCtx.prime(7)
    x = isotropic_vector(DiagonalForm(ctx, (1, 1, 1, 1, 1, 1)))
    assert x[3:] == (0, 0, 0)
    assert sum(v * v for v in x) % 7 == 0


def test_rational_solutions():
    q = FieldCtx.rationals()
    x = isotropic_vector(DiagonalForm(q, (F(1, 2), F(-1, 8))))
    assert F(1, 2) * x[0] ** 2 - F(1, 8) * x[1] ** 2 == 0 and any(x)
    assert isotropic_vector(DiagonalForm(q, (1, -2))) is None          # sqrt(2) irrational
    assert isotropic_vector(DiagonalForm(q, (1, 1, 1))) is None        # definite
    x = isotropic_vector(DiagonalForm(q, (1, 2, -11)))                 # 9 + 2 = 11
    assert x[0] ** 2 + 2 * x[1] ** 2 - 11 * x[2] ** 2 == 0
    l = unit_representation(DiagonalForm(q, (3, 1)))
    assert 3 * l[0] ** 2 + l[1] ** 2 == 1
    l = unit_representation(DiagonalForm(q, (F(1, 4),)))
    assert l == (2,)


def test_rational_undecided():
    q = FieldCtx.rationals()
    # -2x^2 + 11y^2 + 13z^2 is isotropic, but its smallest zero has height 8
    assert isotropic_vector(DiagonalForm(q, (-2, 11, 13)), height_bound=5) is UNDECIDED
    assert isotropic_vector(DiagonalForm(q, (-2, 11, 13))) == (8, 1, 3)
    assert not UNDECIDED and repr(UNDECIDED) == "UNDECIDED"
    assert unit_representation(DiagonalForm(q, (-6, 6)), height_bound=3) is UNDECIDED
    assert unit_representation(DiagonalForm(q, (-6, 6))) == (F(1, 12), F(5, 12))


def _brute_ternary(c, h=60):
    for x in range(h + 1):
        for y in range(h + 1):
            if x == y == 0:
                continue
            num = -(c[0] * x * x + c[1] * y * y)
            if num % c[2] == 0 and num // c[2] >= 0:
                z2 = num // c[2]
                if math.isqrt(z2) ** 2 == z2:
                    return True
    return False


def test_local_obstruction_matches_search():
    from rbjordan.quadform import _ternary_isotropic
    vals = [v for v in range(-7, 8) if v]
    for c in itertools.combinations_with_replacement(vals, 3):
        assert _ternary_isotropic(c) == _brute_ternary(c), c


def test_rational_absence_is_proved():
    Q = FieldCtx.rationals()
    # x^2 - 2 y^2 + 3 z^2 and x^2 - 3 y^2 + z^2 are obstructed at 3
    assert isotropic_vector(DiagonalForm(Q, (1, -2, 3))) is None
    assert isotropic_vector(DiagonalForm(Q, (1, -3, 1))) is None
    # x^2 + y^2 = 3, 3x^2 + 2y^2 = 1
    assert unit_representation(DiagonalForm(Q, (F(1, 3), F(1, 3)))) is None
    assert unit_representation(DiagonalForm(Q, (3, 2))) is None
    assert unit_representation(DiagonalForm(Q, (-1, -2, -5))) is None
    assert unit_representation(DiagonalForm(Q, (3, 2, 1))) == (0, 0, 1)
