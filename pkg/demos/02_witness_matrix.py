"""Construct the binary witness matrix E for the pyramid code, step by step.

Step a lays circulant blocks over the local groups; Step b moves ones into
the global-parity columns until every row and column has weight n - k.

Run: python3 demos/02_witness_matrix.py
"""
from lrcpir import step_a_init, step_b_swaps, validate
from lrcpir.formats import fixture_path, load_code, load_fixture_binary

code = load_code(fixture_path("pyramid_7_4.json"))
E0, cfg = step_a_init(code.profile)
print(f"Step a: seed weights rho = {cfg.rho}")
print(E0.matrix.to_text())
print(f"column weights before swapping: {list(E0.matrix.col_weights())}\n")

E, trace = step_b_swaps(E0, code)
for it in trace.iterations:
    for part in it.partitions:
        for row, p, z in part.swaps:
            print(f"iteration {it.iteration}: row {row} moves its one from column {p} to column {z}")
print(E.matrix.to_text())
print("valid:", validate(E, code).verdict)

# The hand-made choice (row 6 in the second partition) is replayable too.
E_hand, _ = step_b_swaps(E0, code, row_choices={(1, 1): [2], (1, 2): [6]})
print("replayed hand construction equals fixture:", E_hand.matrix == load_fixture_binary("hand_E.txt"))
