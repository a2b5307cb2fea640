import functools

import pytest

from lrcpir.code import reed_solomon
from lrcpir.formats import fixture_path, load_code, load_fixture_binary, load_fixture_matrix
from lrcpir.gf import default_field, make_field
from lrcpir.lrc import LrcCode, build_from_mds_parent

ACCEPTANCE_LINES: list[str] = []


@functools.lru_cache(maxsize=None)
def corpus(max_n: int = 15, field_degrees=(4, 5)) -> tuple:
    """Parity-splitting codes from RS parents: r in 1..3, delta in 2..3, L_c in 1..3, rbar in 0..2."""
    out = []
    for m in field_degrees:
        F = default_field(2, m)
        for r in (1, 2, 3):
            for delta in (2, 3):
                nc = r + delta - 1
                for Lc in (1, 2, 3):
                    for L in range(Lc, max_n + 1):
                        for rbar in (0, 1, 2):
                            n = L * nc + rbar
                            if rbar >= nc or n > max_n:
                                continue
                            k = Lc * r
                            n_prime = n - (Lc - 1) * (delta - 1)
                            if n_prime > F.q - 1:
                                continue
                            out.append(build_from_mds_parent(reed_solomon(F, n_prime, k), r, delta))
    return tuple(out)


@pytest.fixture(scope="session")
def gf8():
    return make_field(2, 3, [1, 0, 1, 1])


@pytest.fixture(scope="session")
def H_C():
    return load_fixture_matrix("H_C.txt")


@pytest.fixture(scope="session")
def H_MDS():
    return load_fixture_matrix("H_MDS.txt")


@pytest.fixture(scope="session")
def hand_E():
    return load_fixture_binary("hand_E.txt")


@pytest.fixture(scope="session")
def pyramid() -> LrcCode:
    return load_code(fixture_path("pyramid_7_4.json"))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
