import itertools

import numpy as np
import pytest

from lrcpir.code import LinearCode, reed_solomon
from lrcpir.errors import IndivisibleLocality, ParameterMismatch
from lrcpir.formats import fixture_path, load_code
from lrcpir.gf import default_field
from lrcpir.lrc import (
    LrcCode,
    build_from_mds_parent,
    check_compliance,
    feasible_surpluses,
    simultaneous_erasure_check,
    profile,
)
from lrcpir.matrix import MatrixGF

from conftest import corpus


def test_profile_examples():
    p = profile(7, 4, 2, 2)
    assert (p.nc, p.L, p.Lc, p.rbar, p.a) == (3, 2, 2, 1, 1)
    assert p.parity_sets == ((3,), (6,), (7,))
    assert p.local_sets == ((1, 2, 3), (4, 5, 6))
    assert p.systematic == (1, 2, 4, 5) and p.distance_bound == 3
    q = profile(6, 4, 2, 2)
    assert (q.rbar, q.a, q.L, q.Lc) == (0, 0, 2, 2)
    assert q.parity_sets == ((3,), (6,))
    with pytest.raises(IndivisibleLocality):
        profile(7, 4, 3, 2)


def test_build_reproduces_fixture(H_MDS, H_C, pyramid):
    parent = LinearCode.from_parity_check(H_MDS)
    C = build_from_mds_parent(parent, 2, 2)
    assert C.H == H_C == pyramid.H
    assert C.h_mds == H_MDS


def test_build_single_local_code():
    F = default_field(2, 4)
    parent = reed_solomon(F, 6, 4)
    C = build_from_mds_parent(parent, 4, 3)
    assert C.n == 6 and C.profile.Lc == 1
    assert C.H == parent.H
    assert check_compliance(C).ok
    with pytest.raises(ParameterMismatch):
        build_from_mds_parent(parent, 4, 4)
    with pytest.raises(ParameterMismatch):
        build_from_mds_parent(parent, 3, 2)


def test_compliance_examples(pyramid):
    rep = check_compliance(pyramid)
    assert rep.ok and rep.dmin == 3 == rep.bound
    assert rep.local_dmins == [2, 2]
    bad = load_code(fixture_path("corrupted_7_4.json"))
    rb = check_compliance(bad)
    assert not rb.parent_mds and not rb.ok


def test_from_parity_check_round_trip(pyramid):
    C = LrcCode.from_parity_check(pyramid.H, 4, 2, 2)
    assert C.H == pyramid.H and C.P_blocks == pyramid.P_blocks and C.M_blocks == pyramid.M_blocks


def test_corpus_compliance_and_optimality():
    for C in corpus(12, (4,)):
        rep = check_compliance(C)
        assert rep.ok, C
        assert rep.dmin == C.profile.distance_bound, C


def test_simultaneous_examples(pyramid):
    res = simultaneous_erasure_check(pyramid, (1, 0))
    assert res.status == "Holds" and res.patterns_checked == 3 * 3
    assert simultaneous_erasure_check(pyramid, (0, 0)).status == "Holds"
    na = simultaneous_erasure_check(pyramid, (2, 0))
    assert na.status == "NotApplicable" and bool(na)


def test_simultaneous_single_surplus_group_holds():
    # with surplus in one group only, every other group is decoded locally
    for C in corpus(12, (4,)):
        for nu in feasible_surpluses(C.profile):
            if sum(1 for v in nu if v) <= 1:
                assert simultaneous_erasure_check(C, nu), (C, nu)


def test_simultaneous_counterexample_is_a_real_codeword():
    F = default_field(2, 4)
    C = build_from_mds_parent(reed_solomon(F, 9, 6), 3, 2)
    assert check_compliance(C).ok and C.code.minimum_distance() == 4
    res = simultaneous_erasure_check(C, (1, 1))
    assert res.status == "Fails"
    support = list(res.counterexample)
    # a nonzero codeword supported inside the erased set makes it uncorrectable
    kernel = C.H.restrict(support).nullspace()
    assert kernel.nrows >= 1
    word = np.zeros(C.n, dtype=np.int64)
    word[[s - 1 for s in support]] = kernel.data[0]
    assert word.any()
    assert (C.H @ MatrixGF(F, word[None, :]).T).is_zero()
    assert 0 < np.count_nonzero(word) <= len(support)
