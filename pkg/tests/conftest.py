import pytest

from williamson.generate import rng_for

ACCEPTANCE_RESULTS = {}


@pytest.fixture
def rng():
    return rng_for(20240611)


def random_sym(rng, dim, scale=1.0):
    g = rng.standard_normal((dim, dim)) * scale
    return (g + g.T) / 2


def random_psd(rng, dim, rank):
    g = rng.standard_normal((dim, rank))
    return g @ g.T


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
