"""Simultaneous erasures across local groups: where the global parities run out.

With a surplus in a single group, the other groups decode locally and the
global parities absorb the rest.  With surpluses in two groups at once the
child code can fail even though their sum does not exceed the number of
global parities.  This script prints such a pattern and a nonzero codeword
hiding inside it.

Run: python3 demos/05_simultaneous_erasures.py
"""
import numpy as np

from lrcpir import build_from_mds_parent, check_compliance, simultaneous_erasure_check, reed_solomon
from lrcpir.gf import default_field
from lrcpir.matrix import MatrixGF

F = default_field(2, 4)
code = build_from_mds_parent(reed_solomon(F, 9, 6), r=3, delta=2)
prof = code.profile
print(f"{code!r}: groups {prof.local_sets}, a = {prof.a} global parities")
print(f"compliant: {check_compliance(code).ok}")

for nu in [(1, 0), (0, 1), (1, 1)]:
    res = simultaneous_erasure_check(code, nu)
    print(f"surplus {nu}: {res.status} over {res.patterns_checked} patterns")
    if res.counterexample:
        erased = list(res.counterexample)
        kernel = code.H.restrict(erased).nullspace()
        word = np.zeros(code.n, dtype=np.int64)
        word[[c - 1 for c in erased]] = kernel.data[0]
        shown = " ".join(F.format_element(int(v)) for v in word)
        print(f"  erased {erased}; codeword ({shown}) vanishes off them")
        print(f"  H c^T = 0: {(code.H @ MatrixGF(F, word[None, :]).T).is_zero()}")
