"""Acceptance suite: one test per numbered criterion.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary prints a
PASS/FAIL line for each criterion.
"""

import math
import time
from pathlib import Path

import numpy as np
import pytest

import oracle
from conftest import random_distribution, random_table
from infodyn import (
    COL,
    ROW,
    JointTable,
    LabeledDistribution,
    Partition,
    conditional_entropy,
    coverage_ratio,
    dynamic_prediction,
    entropy,
    expected_information,
    group_decomposition,
    joint_entropy,
    marginal,
    posterior_decomposition,
    transmission,
    update_components,
    update_information,
)
from infodyn.dynamics import SimulationConfig, simulate, structured_joint
from infodyn.errors import MissingValueError
from infodyn.ingest import read_matrix, write_matrix

FIXTURES = Path(__file__).parent / "fixtures"
SEED = 19870101


def shared_support_pair(rng, n_rows, n_cols, zero_frac=0.0):
    prior = random_table(rng, n_rows, n_cols, zero_frac)
    noise = rng.gamma(0.7, size=prior.shape) * (prior.cells > 0)
    return prior, JointTable.from_array(noise / noise.sum())


def random_shape(rng):
    return tuple(int(k) for k in rng.integers(2, 14, size=2))


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


@pytest.mark.criterion(1, "coverage ratios 0.669 / 0.923 / 1.190")
def test_coverage_arithmetic():
    with Timer() as t:
        cases = [
            ((964.17, 972.48, 969.73), 0.669),
            ((726.75, 732.23, 731.81), 0.923),
            ((669.33, 672.43, 673.02), 1.190),
        ]
        for args, expected in cases:
            assert abs(coverage_ratio(*args) - expected) <= 0.001
    assert t.seconds < 1.0


@pytest.mark.criterion(2, "static reduction on 500 random tables")
def test_static_reduction():
    rng = np.random.default_rng(SEED + 2)
    with Timer() as t:
        for k in range(500):
            p = random_table(rng, *random_shape(rng), zero_frac=0.2 if k % 2 else 0.0)
            values = [dynamic_prediction(p, p), update_information(p, p), transmission(p)]
            assert max(values) - min(values) <= 1e-9
    assert t.seconds < 5.0


@pytest.mark.criterion(3, "update components difference equals dynamic prediction")
def test_component_identity():
    rng = np.random.default_rng(SEED + 3)
    with Timer() as t:
        for k in range(500):
            prior, post = shared_support_pair(rng, *random_shape(rng), zero_frac=0.2 if k % 2 else 0.0)
            i_ab_b, i_ab_ba = update_components(prior, post)
            assert abs((i_ab_b - i_ab_ba) - dynamic_prediction(prior, post)) <= 1e-9
    assert t.seconds < 5.0


@pytest.mark.criterion(4, "expected and update information are nonnegative")
def test_nonnegativity():
    rng = np.random.default_rng(SEED + 4)
    with Timer() as t:
        for k in range(1000):
            n = int(rng.integers(1, 14))
            p = random_distribution(rng, n, zero_frac=0.3)
            w = rng.gamma(0.5, size=n) * (p.probs > 0)
            if k % 3 == 0:
                w[rng.random(n) < 0.5] = 0.0
            if w.sum() == 0:
                w = p.probs.copy()
            q = LabeledDistribution(p.labels, w / w.sum())
            assert expected_information(q, p) >= -1e-12

            prior, post = shared_support_pair(rng, *random_shape(rng), zero_frac=0.2)
            assert update_information(prior, post) >= -1e-12
            # The static pair is admissible too.
            assert update_information(prior, prior) >= -1e-12
    assert t.seconds < 5.0


@pytest.mark.criterion(5, "chain rule and both forms of transmission")
def test_chain_rule():
    rng = np.random.default_rng(SEED + 5)
    with Timer() as t:
        for k in range(500):
            p = random_table(rng, *random_shape(rng), zero_frac=0.25 if k % 2 else 0.0)
            h_row, h_col, h_joint = entropy(marginal(p, ROW)), entropy(marginal(p, COL)), joint_entropy(p)
            h_row_given_col, h_col_given_row = conditional_entropy(p, COL), conditional_entropy(p, ROW)
            assert abs(h_joint - (h_col + h_row_given_col)) <= 1e-9
            assert abs(h_joint - (h_row + h_col_given_row)) <= 1e-9
            t_row, t_col = h_row - h_row_given_col, h_col - h_col_given_row
            assert abs(t_row - t_col) <= 1e-9
            assert abs(transmission(p) - t_row) <= 1e-9
            assert transmission(p) >= -1e-12
    assert t.seconds < 5.0


@pytest.mark.criterion(6, "grouping decomposition additivity")
def test_grouping_additivity():
    rng = np.random.default_rng(SEED + 6)
    seen = set()
    with Timer() as t:
        for k in range(200):
            d = random_distribution(rng, int(rng.integers(1, 14)), zero_frac=0.2)
            kind = ("identity", "single", "random")[k % 3]
            if kind == "identity":
                part = Partition.identity(d.labels)
            elif kind == "single":
                part = Partition.single(d.labels)
            else:
                ids = rng.integers(0, 4, size=len(d.labels))
                part = Partition({lab: f"g{g}" for lab, g in zip(d.labels, ids)})
            g = group_decomposition(d, part)
            assert abs(g.total - entropy(d)) <= 1e-9
            if kind == "identity":
                assert abs(g.between - entropy(d)) <= 1e-9
            if kind == "single":
                assert abs(g.between) <= 1e-9
            seen.add(kind)
    assert seen == {"identity", "single", "random"}
    assert t.seconds < 2.0


@pytest.mark.criterion(7, "dynamic prediction invariant under transposition")
def test_transpose_invariance():
    rng = np.random.default_rng(SEED + 7)
    with Timer() as t:
        for k in range(200):
            prior, post = shared_support_pair(rng, *random_shape(rng), zero_frac=0.2 if k % 2 else 0.0)
            assert abs(dynamic_prediction(prior, post) - dynamic_prediction(prior.T, post.T)) <= 1e-9
    assert t.seconds < 2.0


def hand_tables():
    """Twenty fixed tables, including sparse and degenerate shapes."""
    raw = [
        [[1, 1], [1, 1]],
        [[4, 1], [1, 4]],
        [[9, 1], [1, 9]],
        [[1, 0], [0, 1]],
        [[1, 0], [0, 0]],
        [[1]],
        [[1, 2, 3, 4]],
        [[1], [2], [3]],
        [[3, 0, 0], [0, 2, 0], [0, 0, 1]],
        [[1, 2, 0], [0, 2, 1], [1, 0, 2]],
        [[5, 0, 0], [5, 0, 0], [0, 0, 1]],
        [[0, 0, 0], [1, 2, 3], [0, 0, 0]],
        [[1, 1, 1], [1, 1, 1], [1, 1, 1]],
        [[2, 3], [4, 6]],
        [[1, 2, 3], [4, 5, 6], [7, 8, 9], [10, 11, 12]],
        [[1e-9, 1], [1, 1e-9]],
        [[100, 1, 0, 0], [0, 100, 1, 0], [0, 0, 100, 1], [1, 0, 0, 100]],
        [[0, 7], [3, 0], [0, 0], [2, 2]],
        [[1, 1, 0, 0, 0], [0, 0, 1, 1, 0], [0, 0, 0, 0, 1]],
        np.arange(1, 26).reshape(5, 5) % 4,
    ]
    return [JointTable.from_array(np.asarray(c, float) / np.sum(c)) for c in raw]


def sharpen(t):
    """A posterior on the same support as ``t``."""
    c = t.cells ** 2
    return JointTable.from_array(c / c.sum(), t.row_labels, t.col_labels)


@pytest.mark.criterion(8, "oracle equivalence on 20 hand tables")
def test_oracle_equivalence():
    tables = hand_tables()
    assert len(tables) == 20
    tol = 1e-10
    decomposed = 0
    with Timer() as t:
        for p in tables:
            c = p.cells.tolist()
            rows, cols = oracle.row_sums(c), oracle.col_sums(c)
            assert abs(entropy(marginal(p, ROW)) - oracle.entropy(rows)) <= tol
            assert abs(entropy(marginal(p, COL)) - oracle.entropy(cols)) <= tol
            assert abs(joint_entropy(p) - oracle.joint_entropy(c)) <= tol
            assert abs(conditional_entropy(p, COL) - (oracle.joint_entropy(c) - oracle.entropy(cols))) <= tol
            assert abs(conditional_entropy(p, ROW) - (oracle.joint_entropy(c) - oracle.entropy(rows))) <= tol
            assert abs(transmission(p) - oracle.transmission(c)) <= tol
            assert abs(transmission(p) - oracle.transmission_direct(c)) <= tol

            for q in (p, sharpen(p)):
                qc = q.cells.tolist()
                assert abs(expected_information(q, p) - oracle.kl(q.cells.ravel(), p.cells.ravel())) <= tol
                assert abs(update_information(p, q) - oracle.update_information(c, qc)) <= tol
                assert abs(dynamic_prediction(p, q) - oracle.dynamic_prediction(c, qc)) <= tol
                ours, theirs = update_components(p, q), oracle.update_components(c, qc)
                assert np.max(np.abs(np.subtract(ours, theirs))) <= tol

            row = marginal(p, ROW)
            halves = Partition({lab: str(k % 2) for k, lab in enumerate(row.labels)})
            members = [[k for k in range(len(row.labels)) if k % 2 == g] for g in (0, 1)]
            members = [m for m in members if m]
            between, parts, total = oracle.group_decomposition(row.probs.tolist(), members)
            g = group_decomposition(row, halves)
            assert abs(g.between - between) <= tol and abs(g.total - total) <= tol
            for term, (w, h) in zip(g.groups, parts):
                assert abs(term.weight - w) <= tol and abs(term.within - h) <= tol

            if min(rows) > 0 and min(cols) > 0:
                ours = posterior_decomposition(p).as_dict()
                for key, value in oracle.posterior_decomposition(c).items():
                    assert abs(ours[key] - value) <= tol
                decomposed += 1
    assert decomposed >= 10
    assert t.seconds < 1.0


@pytest.mark.criterion(9, "simulation bound, determinism and entropy trend")
def test_simulation():
    start = structured_joint(4, 4, 0.5)
    initial_h = entropy(marginal(start, ROW))
    assert abs(initial_h - 0.5) <= 1e-9
    finals = []
    with Timer() as t:
        for seed in range(20):
            traj = simulate(SimulationConfig(n_structure=4, n_action=4, steps=1000, sample_size=10,
                                             seed=seed, initial_joint=start))
            h = traj.column("h_a")
            assert len(h) == 1001
            assert h.max() <= 2.0 + 1e-9
            finals.append(h[-1])
        again = simulate(SimulationConfig(n_structure=4, n_action=4, steps=1000, sample_size=10,
                                          seed=7, initial_joint=start))
        first = simulate(SimulationConfig(n_structure=4, n_action=4, steps=1000, sample_size=10,
                                          seed=7, initial_joint=start))
        assert again.records == first.records
        assert again.to_csv() == first.to_csv()
        np.testing.assert_array_equal(again.final.cells, first.final.cells)
    median = float(np.median(finals))
    print(f"median final H(A) over 20 seeds: {median:.4f} bits (initial {initial_h:.4f})")
    assert median > initial_h
    assert t.seconds < 30.0


@pytest.mark.criterion(10, "a-posteriori decomposition report")
def test_posterior_decomposition_report():
    rng = np.random.default_rng(SEED + 10)
    with Timer() as t:
        for _ in range(100):
            n, m = random_shape(rng)
            cells = rng.gamma(0.7, size=(n, m)) + 1e-6
            p = JointTable.from_array(cells / cells.sum())
            d = posterior_decomposition(p).as_dict()
            assert list(d) == ["lhs", "h_a", "h_ratio", "term3", "term4", "residual"]
            assert all(math.isfinite(v) for v in d.values())
            expected = oracle.posterior_decomposition(p.cells.tolist())
            assert abs(d["residual"] - expected["residual"]) <= 1e-10
    assert t.seconds < 1.0


@pytest.mark.criterion(11, "ingestion fill, located error and exact round trip")
def test_ingestion(tmp_path):
    path = FIXTURES / "missing.csv"
    with Timer() as t:
        table = read_matrix(path)
        assert table.cells[0, 1] == 5 and table.cells[1, 2] == 5
        assert table.filled.sum() == 2
        with pytest.raises(MissingValueError) as exc:
            read_matrix(path, fill=None)
        assert (exc.value.row, exc.value.col) == ("a", "y")

        write_matrix(table, tmp_path / "a.csv")
        again = read_matrix(tmp_path / "a.csv")
        assert again.row_labels == table.row_labels and again.col_labels == table.col_labels
        np.testing.assert_array_equal(again.cells, table.cells)
        write_matrix(again, tmp_path / "b.csv")
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    assert t.seconds < 1.0
