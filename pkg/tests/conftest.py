import numpy as np
import pytest

from lsl import families as fam


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def builtin_charts():
    """Every default chart, plus the f = c g meridian."""
    charts = [factory() for factory in fam.BUILTINS.values()]
    charts.append(fam.rs_line_through_origin(2.0))
    seen, out = set(), []
    for ch in charts:
        if ch.name not in seen:
            seen.add(ch.name)
            out.append(ch)
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
