import numpy as np
import pytest

from lrcpir.code import LinearCode, reed_solomon, repetition
from lrcpir.errors import BudgetExceeded, DimensionMismatch, InfeasibleRho, NonCompliantCode
from lrcpir.formats import fixture_path, load_code, load_fixture_binary
from lrcpir.gf import default_field
from lrcpir.ematrix import (
    SwapTrace,
    brute_force_search,
    construct,
    step_a_config,
    step_a_init,
    step_b_swaps,
    swap_feasibility_margin,
    validate,
)
from lrcpir.lrc import build_from_mds_parent, profile
from lrcpir.matrix import BinaryMatrix, MatrixGF

from conftest import corpus


def test_step_a_example(pyramid):
    E, cfg = step_a_init(pyramid.profile)
    assert cfg.rho == (2, 1) and (cfg.m, cfg.t) == (1, 1)
    assert np.array_equal(E.E_tilde, load_fixture_binary("E_tilde.txt").bits)
    assert np.array_equal(E.Z, load_fixture_binary("Z.txt").bits)
    assert np.array_equal(E.W, load_fixture_binary("W.txt").bits)
    assert np.array_equal(E.O, load_fixture_binary("O.txt").bits)


def test_step_a_without_global_parities():
    F = default_field(2, 3)
    C = build_from_mds_parent(reed_solomon(F, 5, 4), 2, 2)
    assert (C.n, C.profile.rbar) == (6, 0)
    E, cfg = step_a_init(C.profile)
    assert E.matrix.is_regular(2)
    E2, trace = step_b_swaps(E, C)
    assert trace.iterations == [] and E2.matrix == E.matrix
    Ec, _ = construct(C)
    assert validate(Ec, C).verdict


def test_step_b_replays_hand_construction(pyramid, hand_E):
    E0, _ = step_a_init(pyramid.profile)
    E, trace = step_b_swaps(E0, pyramid, row_choices={(1, 1): [2], (1, 2): [6]})
    assert E.matrix == hand_E
    (it,) = trace.iterations
    swaps = [s for part in it.partitions for s in part.swaps]
    assert swaps == [(2, 3, 7), (6, 6, 7)]


def test_step_b_default_choice_is_valid(pyramid):
    E, trace = construct(pyramid)
    assert validate(E, pyramid).verdict
    assert trace.method == "two-step" and trace.iterations[0].swap_count == 2
    assert SwapTrace.from_dict(trace.as_dict()).as_dict() == trace.as_dict()


def test_construct_nine_four():
    F = default_field(2, 4)
    C = build_from_mds_parent(reed_solomon(F, 8, 4), 2, 2)
    p = C.profile
    assert (p.n, p.nc, p.L, p.rbar) == (9, 3, 3, 0)
    E, trace = construct(C)
    assert E.matrix.is_regular(5) and validate(E, C).verdict
    assert trace.iterations == []


def test_construct_rejects_noncompliant():
    bad = load_code(fixture_path("corrupted_7_4.json"))
    with pytest.raises(NonCompliantCode):
        construct(bad)


def test_validate_examples(pyramid, hand_E):
    assert validate(hand_E, pyramid).verdict
    ident = validate(np.eye(7, dtype=np.uint8), pyramid)
    assert not ident.verdict and set(ident.row_weights) == {1}
    bits = hand_E.bits.copy()
    bits[0] = 0
    bits[0, :3] = 1
    rep = validate(bits, pyramid)
    # erasing a whole local group of a delta=2 code leaves one global parity for two unknowns
    assert rep.row_correctable[0] == pyramid.code.is_correctable(bits[0])
    assert not rep.row_correctable[0] and not rep.verdict
    with pytest.raises(DimensionMismatch):
        validate(np.eye(3, dtype=np.uint8), pyramid)


def test_brute_force_examples(pyramid):
    E = brute_force_search(pyramid)
    assert E is not None and validate(E, pyramid).verdict
    rep = repetition(default_field(2, 1), 2)
    E2 = brute_force_search(rep)
    assert E2 is not None and E2.is_regular(1) and validate(E2, rep).verdict
    F2 = default_field(2, 1)
    H = MatrixGF(F2, [[0, 1, 0, 1], [0, 0, 1, 1]])
    weak = LinearCode.from_parity_check(H)
    assert brute_force_search(weak) is None
    with pytest.raises(BudgetExceeded):
        brute_force_search(pyramid, budget=2)
    seeded = brute_force_search(pyramid, seed=5)
    assert validate(seeded, pyramid).verdict
    assert brute_force_search(pyramid, seed=5) == seeded


def test_step_a_invariants_on_corpus():
    for C in corpus():
        p = C.profile
        try:
            E, cfg = step_a_init(p)
        except InfeasibleRho:
            continue
        w = p.n - p.k
        assert list(E.matrix.row_weights()) == [w] * p.n
        cols = E.matrix.col_weights()
        for j in range(1, p.L + 1):
            for c in p.block(j):
                expect = w + p.rbar if c in p.parity_sets[j - 1] else w
                assert cols[c - 1] == expect
        for c in p.block(p.L + 1) if p.rbar else ():
            assert cols[c - 1] == p.rbar
        assert swap_feasibility_margin(p, cfg) >= 0


def test_infeasible_seed_weights_fall_back_to_search():
    F = default_field(2, 4)
    C = build_from_mds_parent(reed_solomon(F, 5, 1), 1, 3)
    with pytest.raises(InfeasibleRho):
        step_a_config(C.profile)
    E, trace = construct(C)
    assert trace.method == "search" and validate(E, C).verdict


def test_every_intermediate_state_is_correctable():
    for C in corpus():
        if C.profile.rbar == 0:
            continue
        try:
            _, trace = construct(C)
        except Exception:
            pytest.fail(f"construct failed on {C}")
        assert all(it.all_rows_correctable for it in trace.iterations)
