import pytest

from eewt import field_new, linear_code, reference_scheme

ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def gf2():
    return field_new(2, 1)


@pytest.fixture(scope="session")
def gf8():
    return field_new(2, 3, 0xB)


@pytest.fixture(scope="session")
def gf16():
    return field_new(2, 4)


@pytest.fixture(scope="session")
def gf256():
    return field_new(2, 8, 0x11D)


@pytest.fixture(scope="session")
def ref():
    return reference_scheme()


@pytest.fixture(scope="session")
def binary42(gf2):
    """The non-MDS binary (4,2) code spanned by 1010 and 0101."""
    return linear_code(gf2, [[1, 0, 1, 0], [0, 1, 0, 1]], name="C*")


def random_full_rank(field, k, n, rng):
    from eewt.matrix import rank_of

    while True:
        g = rng.integers(0, field.q, size=(k, n))
        if rank_of(field, g) == k:
            return g


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
