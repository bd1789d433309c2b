"""The nilpotency index rb(J_{n+1}(f)).

Two independent routes:

* :func:`rb_index_table` -- closed-form case analysis by field and form,
  with an explicit witness operator wherever one can be built;
* :func:`rb_index_bruteforce` / :func:`census` -- exhaustive enumeration of
  every weight-0 RB-operator over a small prime field, either naively
  (vectorised over all p^((n+1)^2) matrices) or with a column-by-column
  search that only discards partial operators violating a *necessary*
  condition of the identity, so the census stays complete.

Pruning rules (all consequences of the weight-0 identity):

``isotropic``
    every image R(x) has zero norm, so all columns lie on the cone
    alpha^2 = (v, v) and are pairwise orthogonal for the polar form
    alpha beta - (v, u); R(1) has zero scalar part.
``diagonal``
    when R(1) != 0, the coefficient of e_i in R(e_i) vanishes.
``skew``
    when R(1) != 0, d_j [R(e_i)]_j + d_i [R(e_j)]_i = 0.
``square_zero``
    when R(1) = 0, R^2 = 0 (checked on every column as soon as it is
    determined).

Every surviving leaf still passes the full identity check.
"""

from __future__ import annotations

import csv
import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .constructions import build_j3, find_witness, solve_j3_params
from .errors import BudgetExceeded, UnsupportedField
from .jordan import BilinearForm, CliffordAlgebra
from .quadform import UNDECIDED, DiagonalForm
from .rbop import LinOperator, extend_by_zero
from .scalars import ALGCLOSED, PRIME, RATIONALS, REAL, FieldCtx, legendre, p_mod4_class

RULES = frozenset({"isotropic", "diagonal", "skew", "square_zero"})
DEFAULT_BUDGET = 10**8

TABLE, BRUTE, CONSTRUCTIVE = "TheoremTable", "BruteForce", "Constructive"


@dataclass(frozen=True)
class SearchConfig:
    max_naive_space: int = DEFAULT_BUDGET
    pruning: bool = True
    rules: frozenset = RULES
    parallel_width: int = 1

    def __post_init__(self):
        if self.max_naive_space <= 0 or self.parallel_width <= 0:
            raise ValueError("budgets must be positive")
        unknown = set(self.rules) - RULES
        if unknown:
            raise ValueError(f"unknown pruning rules {sorted(unknown)}")

    @classmethod
    def from_env(cls, **kw) -> "SearchConfig":
        """Honour ``RB_SEARCH_BUDGET`` for the budget."""
        budget = os.environ.get("RB_SEARCH_BUDGET")
        if budget is not None and "max_naive_space" not in kw:
            kw["max_naive_space"] = int(budget)
        return cls(**kw)


@dataclass
class Census:
    """Count of all weight-0 RB-operators by nilpotency index."""

    p: int
    form: tuple
    counts: dict
    certified: str          # "naive" or "pruned"
    complete: bool = True
    nodes: int = 0
    witnesses: dict = field(default_factory=dict)   # index -> smallest column tuple
    operators: Optional[list] = None                # column tuples, when kept

    @property
    def max_index(self) -> int:
        return max(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def algebra(self) -> CliffordAlgebra:
        return CliffordAlgebra.over(FieldCtx.prime(self.p), self.form)

    def operator_list(self) -> list:
        alg = self.algebra()
        return [LinOperator.from_columns(alg, cols) for cols in self.operators or ()]


@dataclass
class RbIndexVerdict:
    value: int
    method: str
    witness: Optional[LinOperator] = None
    certificate: Optional[dict] = None
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        from .rbop import format_operator
        return {
            "value": self.value,
            "method": self.method,
            "witness": format_operator(self.witness) if self.witness is not None else None,
            "certificate": {str(k): v for k, v in sorted(self.certificate.items())}
            if self.certificate else None,
            "notes": list(self.notes),
        }


# -- fast integer kernels (Z_p only) ---------------------------------------------

def _mul(x, y, d, p):
    """Jordan product of coordinate tuples (alpha, v_1..v_n)."""
    x0, y0 = x[0], y[0]
    s = x0 * y0
    for di, xi, yi in zip(d, x[1:], y[1:]):
        s += di * xi * yi
    return (s % p,) + tuple((x0 * yi + y0 * xi) % p for xi, yi in zip(x[1:], y[1:]))


def _apply(cols, z, p):
    dim = len(z)
    return tuple(sum(z[j] * cols[j][i] for j in range(dim)) % p for i in range(dim))


def _is_rb(cols, d, p) -> bool:
    dim = len(cols)
    basis = [tuple(int(i == j) for i in range(dim)) for j in range(dim)]
    for a in range(dim):
        for b in range(dim):
            lhs = _mul(cols[a], cols[b], d, p)
            inner = tuple((s + t) % p for s, t in zip(_mul(cols[a], basis[b], d, p),
                                                      _mul(basis[a], cols[b], d, p)))
            if lhs != _apply(cols, inner, p):
                return False
    return True


def _index(cols, p) -> Optional[int]:
    dim = len(cols)
    power = cols
    for s in range(1, dim + 2):
        if not any(any(c) for c in power):
            return s
        power = tuple(_apply(cols, c, p) for c in power)
    return None


class _Tally:
    def __init__(self, keep: bool):
        self.counts = Counter()
        self.witnesses = {}
        self.operators = [] if keep else None
        self.nodes = 0

    def add(self, cols, p):
        s = _index(cols, p)
        self.counts[s] += 1
        if s not in self.witnesses or cols < self.witnesses[s]:
            self.witnesses[s] = cols
        if self.operators is not None:
            self.operators.append(cols)

    def merge(self, other: "_Tally"):
        self.counts.update(other.counts)
        for s, cols in other.witnesses.items():
            if s not in self.witnesses or cols < self.witnesses[s]:
                self.witnesses[s] = cols
        if self.operators is not None and other.operators is not None:
            self.operators.extend(other.operators)
        self.nodes += other.nodes


# -- naive oracle --------------------------------------------------------------

def _naive(p: int, d: tuple, budget: int, keep: bool) -> _Tally:
    """Vectorised scan over every (n+1)x(n+1) matrix.

    The first column is looped over in Python; all remaining entries are
    enumerated at once as a numpy block.  Shares no code with the pruned path.
    """
    n = len(d)
    dim = n + 1
    if p ** (dim * dim) > budget:
        raise BudgetExceeded(f"naive space {p}^{dim * dim} exceeds budget {budget}")
    dvec = np.array((1,) + tuple(d), dtype=np.int32)     # weights of the scalar pairing
    rest = np.indices((p,) * (dim * (dim - 1)), dtype=np.int32).reshape(dim * (dim - 1), -1).T
    rest_cols = rest.reshape(-1, dim - 1, dim).transpose(0, 2, 1)    # (N, dim, dim-1)
    eye = np.eye(dim, dtype=np.int32)

    def jmul(x, y):
        s = (x * y * dvec).sum(axis=-1)
        v = x[..., :1] * y[..., 1:] + y[..., :1] * x[..., 1:]
        return np.concatenate([s[..., None], v], axis=-1) % p

    def act(M, z):
        return np.matmul(M, z[..., None])[..., 0] % p

    tally = _Tally(keep)
    pairs = [(a, b) for a in range(dim) for b in range(dim)]
    for first in itertools.product(range(p), repeat=dim):
        M = np.empty((rest_cols.shape[0], dim, dim), dtype=np.int32)
        M[:, :, 0] = first
        M[:, :, 1:] = rest_cols
        for a, b in pairs:
            if not len(M):
                break
            Ra, Rb = M[:, :, a], M[:, :, b]
            ea, eb = np.broadcast_to(eye[a], Ra.shape), np.broadcast_to(eye[b], Rb.shape)
            lhs = jmul(Ra, Rb)
            rhs = act(M, (jmul(Ra, eb) + jmul(ea, Rb)) % p)
            M = M[(lhs == rhs).all(axis=1)]
        tally.nodes += rest_cols.shape[0]
        for mat in M:
            cols = tuple(tuple(int(x) for x in mat[:, j]) for j in range(dim))
            tally.add(cols, p)
    return tally


# -- pruned search -------------------------------------------------------------

class _Space:
    """Candidate columns and their pairwise orthogonality, shared by shards."""

    def __init__(self, p, d, rules, budget):
        n = len(d)
        self.p, self.d, self.n, self.rules = p, tuple(d), n, frozenset(rules)
        if p ** (n + 1) > budget:
            raise BudgetExceeded(f"column space {p}^{n + 1} exceeds budget {budget}")
        iso = "isotropic" in rules
        vecs = list(itertools.product(range(p), repeat=n + 1))
        if iso:
            vecs = [v for v in vecs if self.polar(v, v) == 0]
        self.vecs = vecs
        self.index = {v: i for i, v in enumerate(vecs)}
        everything = frozenset(range(len(vecs)))
        if iso:
            self.adj = [frozenset(j for j, u in enumerate(vecs) if self.polar(v, u) == 0)
                        for v in vecs]
        else:
            self.adj = [everything] * len(vecs)
        self.everything = everything

    def polar(self, x, y):
        s = x[0] * y[0]
        for di, xi, yi in zip(self.d, x[1:], y[1:]):
            s -= di * xi * yi
        return s % self.p

    def r1_candidates(self):
        zero = (0,) * (self.n + 1)
        if "isotropic" in self.rules:
            cands = [v for v in self.vecs if v[0] == 0]
        else:
            cands = list(self.vecs)
        cands.sort(key=lambda v: (v != zero, v))
        return cands


def _search_shard(space: _Space, r1_list, budget: int, keep: bool) -> _Tally:
    tally = _Tally(keep)
    p, d, n = space.p, space.d, space.n
    rules = space.rules
    zero = (0,) * (n + 1)
    vecs, adj = space.vecs, space.adj

    def spend():
        tally.nodes += 1
        if tally.nodes > budget:
            raise BudgetExceeded(f"pruned search exceeded {budget} nodes", partial=tally)

    def leaf(cols):
        if _is_rb(cols, d, p):
            tally.add(cols, p)

    for r1 in r1_list:
        spend()
        if r1 == zero:
            _branch_zero(space, tally, spend, leaf)
        else:
            _branch_nonzero(space, r1, tally, spend, leaf)
    return tally


def _branch_zero(space, tally, spend, leaf):
    """R(1) = 0: image isotropic and R^2 = 0."""
    p, n = space.p, space.n
    vecs, adj = space.vecs, space.adj
    sq = "square_zero" in space.rules
    zero = (0,) * (n + 1)
    chosen = []

    def square_ok(depth):
        # R(c) is determined once c has no weight on the unassigned e_m
        for c in chosen:
            if any(c[m] for m in range(depth + 1, n + 1)):
                continue
            for t in range(n + 1):
                if sum(c[m] * chosen[m - 1][t] for m in range(1, depth + 1)) % p:
                    return False
        return True

    def dfs(depth, allowed):
        if depth == n:
            leaf((zero,) + tuple(chosen))
            return
        for u in sorted(allowed):
            spend()
            chosen.append(vecs[u])
            if not sq or square_ok(depth + 1):
                dfs(depth + 1, allowed & adj[u])
            chosen.pop()

    dfs(0, space.everything)


def _branch_nonzero(space, r1, tally, spend, leaf):
    """R(1) != 0: the diagonal condition per column, the skew condition per pair."""
    p, d, n = space.p, space.d, space.n
    vecs, adj = space.vecs, space.adj
    diag = "diagonal" in space.rules
    skew = "skew" in space.rules
    base = adj[space.index[r1]] if r1 in space.index else space.everything
    per_col = [sorted(u for u in base if not diag or vecs[u][i + 1] == 0) for i in range(n)]
    chosen = []

    def compatible(i, v):
        if not skew:
            return True
        for j, w in enumerate(chosen):
            # d_i [R(e_j)]_i + d_j [R(e_i)]_j = 0, coordinates shifted by the scalar slot
            if (d[i] * w[i + 1] + d[j] * v[j + 1]) % p:
                return False
        return True

    def dfs(i, allowed):
        if i == n:
            leaf((r1,) + tuple(chosen))
            return
        for u in per_col[i]:
            if u not in allowed:
                continue
            spend()
            v = vecs[u]
            if not compatible(i, v):
                continue
            chosen.append(v)
            dfs(i + 1, allowed & adj[u])
            chosen.pop()

    dfs(0, space.everything)


def _pruned(p, d, cfg: SearchConfig, keep: bool) -> _Tally:
    space = _Space(p, d, cfg.rules, cfg.max_naive_space)
    cands = space.r1_candidates()
    width = min(cfg.parallel_width, len(cands))
    shards = [cands[s::width] for s in range(width)]
    total = _Tally(keep)
    if width == 1:
        total.merge(_search_shard(space, shards[0], cfg.max_naive_space, keep))
        return total
    with ProcessPoolExecutor(max_workers=width) as pool:
        futures = [pool.submit(_search_shard, space, sh, cfg.max_naive_space, keep) for sh in shards]
        for fut in futures:
            total.merge(fut.result())
    return total


# -- public API -----------------------------------------------------------------

def _prime_form(ctx: FieldCtx, form) -> tuple:
    if not ctx.is_prime:
        raise UnsupportedField(f"exhaustive search needs a prime field, got {ctx}")
    if isinstance(form, DiagonalForm):
        return tuple(form.d)
    return BilinearForm(ctx, tuple(form)).d


def census(ctx: FieldCtx, form, cfg: SearchConfig | None = None, *,
           mode: str = "auto", keep_operators: bool = False) -> Census:
    """Every weight-0 RB-operator on J_{n+1}(f) over Z_p, grouped by index.

    ``mode`` is ``"naive"``, ``"pruned"`` or ``"auto"`` (naive when it fits the
    budget and pruning is disabled, pruned otherwise).
    """
    cfg = cfg or SearchConfig()
    d = _prime_form(ctx, form)
    p = ctx.p
    if mode == "auto":
        fits = p ** ((len(d) + 1) ** 2) <= cfg.max_naive_space
        mode = "naive" if (fits and not cfg.pruning) else "pruned"
    if mode == "naive":
        tally = _naive(p, d, cfg.max_naive_space, keep_operators)
    elif mode == "pruned":
        try:
            tally = _pruned(p, d, cfg, keep_operators)
        except BudgetExceeded as exc:
            part = exc.partial
            if isinstance(part, _Tally):
                exc.partial = Census(p, d, dict(part.counts), "pruned", complete=False,
                                     nodes=part.nodes, witnesses=dict(part.witnesses))
            raise
    else:
        raise ValueError(f"unknown mode {mode!r}")
    ops = sorted(tally.operators) if tally.operators is not None else None
    return Census(p, d, dict(sorted(tally.counts.items(), key=lambda kv: (kv[0] is None, kv[0] or 0))),
                  mode, nodes=tally.nodes, witnesses=dict(tally.witnesses), operators=ops)


def rb_index_bruteforce(ctx: FieldCtx, form, cfg: SearchConfig | None = None, *,
                        mode: str = "auto") -> RbIndexVerdict:
    c = census(ctx, form, cfg, mode=mode)
    alg = c.algebra()
    value = c.max_index
    witness = LinOperator.from_columns(alg, c.witnesses[value])
    return RbIndexVerdict(value, BRUTE, witness, dict(c.counts), [f"certified: {c.certified}"])


def census_rows(c: Census) -> list:
    form = ",".join(str(x) for x in c.form)
    certified = c.certified if c.complete else f"{c.certified} (partial)"
    return [(c.p, form, idx, cnt, certified) for idx, cnt in c.counts.items()]


def write_census_csv(censuses, fh) -> None:
    writer = csv.writer(fh)
    writer.writerow(["p", "form", "index", "count", "certified"])
    for c in censuses:
        writer.writerows(census_rows(c))


# -- closed-form table -----------------------------------------------------------

def _index2_witness(alg: CliffordAlgebra, height_bound: int):
    """Nonzero J_3-family operator on some span(1, e_i, e_j), lifted if n > 2."""
    for pair in itertools.combinations(range(1, alg.n + 1), 2):
        sub = CliffordAlgebra(alg.form.restrict(pair))
        params = solve_j3_params(sub, height_bound)
        if params is None or params is UNDECIDED:
            continue
        P = build_j3(sub, params)
        return P if alg.n == 2 else extend_by_zero(P, alg, pair)
    return None


def rb_index_table(ctx: FieldCtx, form, height_bound: int = 200) -> RbIndexVerdict:
    """rb(J_{n+1}(f)) from the case analysis by field.

    Over the symbolic fields ``R`` and ``Cbar`` the form entries are read as
    rationals; any witness attached is an operator over Q with the same form.
    """
    if ctx.kind == RATIONALS:
        raise UnsupportedField(
            "no closed form for rb over Q: for f = (1,-3,1) it hinges on the Pell "
            "equation x^2 - 3y^2 = -1 having no integer solutions; use a prime field")
    if isinstance(form, DiagonalForm):
        form = BilinearForm(ctx, tuple(form.d))
    else:
        form = BilinearForm(ctx, tuple(form))
    n = len(form.d)
    if n < 2:
        raise ValueError("need n >= 2")
    k = n + 1

    if ctx.kind == PRIME:
        alg = CliffordAlgebra(form)
        if k == 3:
            return RbIndexVerdict(2, TABLE, _index2_witness(alg, height_bound),
                                  notes=["J_3 over a finite field: ternary form always isotropic"])
        if k == 4:
            residues = sum(legendre(x, ctx) == 1 for x in form.d)
            odd = residues % 2 == 1
            three = odd if p_mod4_class(ctx) == 1 else not odd
            note = f"p = {p_mod4_class(ctx)} mod 4, {residues} residue(s) among d_1, d_2, d_3"
            if not three:
                return RbIndexVerdict(2, TABLE, _index2_witness(alg, height_bound), notes=[note])
            return RbIndexVerdict(3, TABLE, find_witness(alg), notes=[note])
        note = "k = 5" if k == 5 else "k >= 6 over a finite field"
        return RbIndexVerdict(3, TABLE, find_witness(alg), notes=[note])

    signs = [x > 0 for x in form.d]
    qalg = CliffordAlgebra(BilinearForm(FieldCtx.rationals(), tuple(form.d)))
    if ctx.kind == ALGCLOSED:
        if k == 3:
            return RbIndexVerdict(2, TABLE, _index2_witness(qalg, height_bound))
        return RbIndexVerdict(3, TABLE, find_witness(qalg, height_bound),
                              notes=["witness over Q when the explicit families allow one"])

    assert ctx.kind == REAL
    if k == 3:
        # J_3: rb = 2 iff a^2 - d_1 b^2 - d_2 c^2 is isotropic over R
        if not any(signs):
            return RbIndexVerdict(1, TABLE, LinOperator.zero(qalg),
                                  notes=["a^2 - d_1 b^2 - d_2 c^2 is definite: only R = 0"])
        notes = ["from the J_3 classification: nonzero operators exist, all with R^2 = 0"]
        if all(signs):
            notes.append("conflicts with the value 1 stated for f = (1,1) elsewhere; "
                         "the witness below has R != 0")
        return RbIndexVerdict(2, TABLE, _index2_witness(qalg, height_bound), notes=notes)
    positives = sum(signs)
    if positives == 0:
        return RbIndexVerdict(1, TABLE, LinOperator.zero(qalg), notes=["all d_i < 0"])
    if positives == n or positives == 1:
        return RbIndexVerdict(2, TABLE, _index2_witness(qalg, height_bound),
                              notes=["all d_i > 0" if positives == n else "exactly one d_i > 0"])
    return RbIndexVerdict(3, TABLE, find_witness(qalg, height_bound),
                          notes=["mixed signs with at least two positive entries"])
