import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from braidtwist.braid import BraidWord  # noqa: E402
from braidtwist.free import reduce  # noqa: E402

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@st.composite
def braid_words(draw, min_n=2, max_n=6, max_len=20, positive=False):
    n = draw(st.integers(min_n, max_n))
    gens = st.integers(1, n - 1)
    if not positive:
        gens = st.tuples(gens, st.sampled_from([1, -1])).map(lambda t: t[0] * t[1])
    letters = draw(st.lists(gens, max_size=max_len))
    return BraidWord(n, tuple(letters))


@st.composite
def free_words(draw, min_n=2, max_n=6, max_len=6, n=None):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    g = st.tuples(st.integers(1, n - 1), st.sampled_from([1, -1])).map(lambda t: t[0] * t[1])
    return reduce(n - 1, draw(st.lists(g, max_size=max_len)))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def record_acceptance():
    def record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_RESULTS.append((name, ok, detail))
        print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")

    return record
