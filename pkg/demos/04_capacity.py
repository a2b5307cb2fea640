"""Exact MDS-PIR capacities and the achievability verdict for a locality code.

Run: python3 demos/04_capacity.py
"""
from lrcpir import verdict
from lrcpir.capacity import capacity
from lrcpir.formats import fixture_path, load_code

n, k = 7, 4
for f in (1, 2, 3, 4, 8, 16, 64):
    c = capacity(n, k, f)
    print(f"C_{f:<2} = {str(c):>28}  ~ {float(c):.6f}")
print(f"C_inf = {capacity(n, k)}")

v = verdict(load_code(fixture_path("pyramid_7_4.json")))
print(f"\npyramid code: {v.status} via {v.method}")
print(v.witness.to_text())

bad = verdict(load_code(fixture_path("corrupted_7_4.json")))
print(f"corrupted code: {bad.status} ({bad.reason})")
