"""
The nilpotency index rb(J) by case analysis and by search
=========================================================

For k = 4 over Z_p the answer depends on p mod 4 and on how many d_i
are squares.  Both routes are run side by side here.
"""

import itertools
import time

from rbjordan import FieldCtx, legendre
from rbjordan.rbindex import rb_index_bruteforce, rb_index_table

for p in (5, 7):
    ctx = FieldCtx.prime(p)
    non = next(x for x in range(2, p) if legendre(x, ctx) == -1)
    print(f"p = {p} ({p % 4} mod 4), non-residue {non}")
    for bits in itertools.product((0, 1), repeat=3):
        d = tuple(non if b else 1 for b in bits)
        t = time.perf_counter()
        table = rb_index_table(ctx, d)
        brute = rb_index_bruteforce(ctx, d)
        print(f"  d = {d}  table {table.value}  search {brute.value}  "
              f"census {brute.certificate}  ({time.perf_counter() - t:.1f} s)")

# over the symbolic fields only the table is available
R, C = FieldCtx.real(), FieldCtx.algclosed()
for ctx, d in [(R, (-1, -1, -1)), (R, (1, 1, 1)), (R, (1, -1, -1)), (R, (1, 1, -1)), (C, (1, 1, 1))]:
    v = rb_index_table(ctx, d)
    print(f"{ctx} {d}: rb = {v.value}", "; ".join(v.notes))
