from pathlib import Path

import pytest

from latinterp.order import boolean, chain, downsets_of

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE_RESULTS: dict[str, str] = {}


def five_element():
    """Downsets of x<y, x<z: 0 < x < y, z < 1 with y, z incomparable."""
    return downsets_of(["x", "y", "z"], [("x", "y"), ("x", "z")])


SMALL_LATTICES = {
    "chain2": lambda: chain(2),
    "chain3": lambda: chain(3),
    "chain4": lambda: chain(4),
    "diamond": lambda: boolean(2),
    "five": five_element,
    "boolean3": lambda: boolean(3),
}


@pytest.fixture(params=sorted(SMALL_LATTICES))
def small_lattice(request):
    return SMALL_LATTICES[request.param]()


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[name])
