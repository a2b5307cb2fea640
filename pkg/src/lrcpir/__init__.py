"""Locality codes, their correctable-erasure witness matrices and MDS-PIR capacity.

Modules
-------
gf        arithmetic in GF(p^m) with log/antilog tables
matrix    dense matrices over GF(q), batched ranks, binary matrices
code      linear codes, minimum distance, MDS and correctability tests
lrc       (r, delta) information locality codes built from MDS parents
ematrix   two-step construction, validation and search of witness matrices
capacity  exact MDS-PIR capacities and the achievability verdict
formats   text/JSON formats and the bundled fixtures
cli       ``lrcpir`` command-line tool
"""
from .capacity import AchievabilityVerdict, CapacityQuery, c_asymptotic, c_finite, verdict
from .code import ErasurePattern, LinearCode, reed_solomon
from .ematrix import EMatrix, SwapTrace, brute_force_search, construct, step_a_init, step_b_swaps, validate
from .gf import FieldElement, FieldSpec, default_field, element_order, make_field
from .lrc import LocalityProfile, LrcCode, build_from_mds_parent, check_compliance, simultaneous_erasure_check, profile
from .matrix import BinaryMatrix, MatrixGF, hconcat, vconcat

__version__ = "0.1.0"
