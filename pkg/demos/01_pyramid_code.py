"""Rebuild the [7,4] pyramid code from its [6,4] MDS parent and inspect it.

Run: python3 demos/01_pyramid_code.py
"""
from lrcpir import LinearCode, build_from_mds_parent, check_compliance
from lrcpir.formats import load_fixture_matrix

H_parent = load_fixture_matrix("H_MDS.txt")
parent = LinearCode.from_parity_check(H_parent)
print(f"parent: [{parent.n},{parent.k}] over {parent.field.literal}, MDS = {parent.is_mds()}")

# Split the first parity row into one local parity per group of r = 2 symbols.
code = build_from_mds_parent(parent, r=2, delta=2)
prof = code.profile
print(f"child: {code!r}")
print(f"  local groups {prof.local_sets}, parity sets {prof.parity_sets}")
print("  parity-check matrix:")
for row in code.H.to_strings():
    print("   ", " ".join(f"{e:>3}" for e in row))

report = check_compliance(code)
print(f"  local d_min {report.local_dmins}, d_min {report.dmin}, bound {report.bound}")
print(f"  distance-optimal: {report.distance_optimal}")
