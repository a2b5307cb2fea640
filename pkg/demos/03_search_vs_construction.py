"""Compare the two-step construction with exhaustive backtracking search.

Search cost grows fast with n; past n = 10 it can run out of budget while
the construction still answers in milliseconds.

Run: python3 demos/03_search_vs_construction.py
"""
import time

from lrcpir import brute_force_search, build_from_mds_parent, construct, reed_solomon, validate
from lrcpir.errors import BudgetExceeded
from lrcpir.gf import default_field

F = default_field(2, 4)
for n_prime, k, r, delta in [(6, 4, 2, 2), (8, 4, 2, 2), (7, 3, 3, 2), (9, 4, 2, 3), (5, 1, 1, 3)]:
    code = build_from_mds_parent(reed_solomon(F, n_prime, k), r, delta)
    t0 = time.perf_counter()
    E, trace = construct(code)
    t1 = time.perf_counter()
    try:
        found = "found" if brute_force_search(code, budget=200_000) is not None else "none exists"
    except BudgetExceeded:
        found = "over budget"
    t2 = time.perf_counter()
    print(
        f"{code!r}: construct ({trace.method}, {t1 - t0:.3f}s) valid={validate(E, code).verdict}; "
        f"search {found} ({t2 - t1:.3f}s)"
    )
