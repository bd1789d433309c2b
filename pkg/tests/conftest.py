import itertools

import pytest
from hypothesis import strategies as st

from rbjordan.jordan import CliffordAlgebra
from rbjordan.scalars import FieldCtx


def forms(p, n):
    """Every nondegenerate diagonal form of length n over Z_p."""
    return list(itertools.product(range(1, p), repeat=n))


@st.composite
def algebras(draw, primes=(3, 5, 7), ns=(2, 3, 4)):
    p = draw(st.sampled_from(primes))
    n = draw(st.sampled_from(ns))
    d = draw(st.lists(st.integers(1, p - 1), min_size=n, max_size=n))
    return CliffordAlgebra.over(FieldCtx.prime(p), d)


@st.composite
def elements(draw, alg):
    p = alg.ctx.p
    coords = draw(st.lists(st.integers(0, p - 1), min_size=alg.dim, max_size=alg.dim))
    return alg.from_coords(coords)


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0][2:])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key} {detail}")
