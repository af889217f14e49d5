import pytest

from planarharm.exactalg import Params, Rational
from planarharm.verify import sample_params


@pytest.fixture(params=[3, 4], ids=lambda n: f"N{n}")
def N(request):
    return request.param


@pytest.fixture
def P(N):
    return Params(N, Rational(2, 7), Rational(3, 5))


@pytest.fixture
def samples(N):
    return sample_params(N, 3, seed=20261016)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
