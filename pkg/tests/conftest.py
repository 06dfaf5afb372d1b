import pytest
from hypothesis import strategies as st

from gcdcert.polyz import PolyZ

small_ints = st.integers(min_value=-50, max_value=50)
nonzero_ints = st.integers(min_value=-10**6, max_value=10**6).filter(bool)
polys = st.lists(small_ints, max_size=6).map(PolyZ)
nonzero_polys = polys.filter(bool)


_acceptance_results = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.module.__name__.endswith("test_acceptance"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance_results.append((doc, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for doc, outcome in _acceptance_results:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {doc}")
