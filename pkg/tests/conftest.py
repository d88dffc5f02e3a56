import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from starcodes import GF, LinearCode  # noqa: E402
from starcodes.matrix import GFMatrix  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def gf2():
    return GF(2)


@pytest.fixture
def block_code(gf2):
    """The [4,2] binary code spanned by (1,1,0,0) and (0,0,1,1)."""
    return LinearCode.from_rows(gf2, [[1, 1, 0, 0], [0, 0, 1, 1]])


@pytest.fixture
def uneven_triple(gf2):
    g12 = LinearCode.from_rows(gf2, [[1, 1, 1, 0], [0, 0, 0, 1]])
    g3 = LinearCode.from_rows(gf2, [[1, 1, 1, 0]])
    return [g12, g12, g3]


@st.composite
def matrices(draw, qs=(2, 3, 4), max_rows=6, max_cols=7):
    F = GF(draw(st.sampled_from(qs)))
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(st.integers(0, F.q - 1), min_size=c, max_size=c),
                         min_size=r, max_size=r))
    return GFMatrix(F, rows, c)


@st.composite
def codes(draw, qs=(2, 3, 4), max_n=6, max_k=3, n=None, field=None):
    F = field if field is not None else GF(draw(st.sampled_from(qs)))
    if n is None:
        n = draw(st.integers(1, max_n))
    r = draw(st.integers(0, max_k))
    rows = draw(st.lists(st.lists(st.integers(0, F.q - 1), min_size=n, max_size=n),
                         min_size=r, max_size=r))
    return LinearCode.from_rows(F, rows, n)


# one status line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
