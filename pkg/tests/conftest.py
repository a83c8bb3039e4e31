import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from infodyn import JointTable, LabeledDistribution

sys.path.insert(0, str(Path(__file__).parent))


def random_table(rng, n_rows, n_cols, zero_frac=0.0):
    cells = rng.gamma(0.7, size=(n_rows, n_cols))
    if zero_frac:
        cells[rng.random(cells.shape) < zero_frac] = 0.0
        if cells.sum() == 0:
            cells[0, 0] = 1.0
    return JointTable.from_array(cells / cells.sum())


def random_pair(rng, n_rows, n_cols, zero_frac=0.0):
    """Prior and posterior where the posterior's support lies inside the prior's."""
    prior = random_table(rng, n_rows, n_cols, zero_frac)
    noise = rng.gamma(0.7, size=prior.shape) * (prior.cells > 0)
    if rng.random() < 0.3:
        noise[rng.random(noise.shape) < 0.3] = 0.0
    if noise.sum() == 0:
        noise = prior.cells.copy()
    return prior, JointTable.from_array(noise / noise.sum())


def random_distribution(rng, n, zero_frac=0.0):
    w = rng.gamma(0.7, size=n)
    if zero_frac:
        w[rng.random(n) < zero_frac] = 0.0
        if w.sum() == 0:
            w[0] = 1.0
    return LabeledDistribution.from_weights(w)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def coupled():
    return JointTable.from_array([[0.4, 0.1], [0.1, 0.4]], ["a", "b"], ["x", "y"])


@pytest.fixture
def sharper():
    return JointTable.from_array([[0.45, 0.05], [0.05, 0.45]], ["a", "b"], ["x", "y"])


@st.composite
def joint_tables(draw, max_side=6):
    n = draw(st.integers(1, max_side))
    m = draw(st.integers(1, max_side))
    cells = draw(
        st.lists(
            st.one_of(st.just(0.0), st.floats(1e-6, 1e3)),
            min_size=n * m,
            max_size=n * m,
        ).filter(lambda xs: sum(xs) > 0)
    )
    arr = np.array(cells).reshape(n, m)
    return JointTable.from_array(arr / arr.sum())


# Acceptance reporting: tests marked ``criterion`` get one summary line each.
_criteria = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, text = marker.args
    passed = call.excinfo is None
    prev = _criteria.get(number, (text, True))
    _criteria[number] = (text, prev[1] and passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        text, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {text}")
