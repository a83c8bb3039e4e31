"""Static information measures in bits.

The convention 0 * log 0 = 0 holds everywhere: zero-probability cells are
dropped from every sum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InfiniteSurpriseError, LabelError
from .tables import (
    COL,
    ROW,
    JointTable,
    LabeledDistribution,
    Partition,
    check_axis,
    marginal,
)

MBITS_PER_BIT = 1000.0


def plogp(p) -> np.ndarray:
    """Elementwise p * log2(p) with zero where p == 0."""
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    nz = p > 0
    out[nz] = p[nz] * np.log2(p[nz])
    return out


def _h(p) -> float:
    h = float(-plogp(p).sum())
    # A probability of exactly or a hair above 1 gives -0.0 or a tiny negative.
    return h if h > 0 else 0.0


def entropy(d: LabeledDistribution) -> float:
    """Shannon entropy H = -sum p log2 p of a distribution."""
    return _h(d.probs)


def joint_entropy(t: JointTable) -> float:
    return _h(t.cells)


def conditional_entropy(t: JointTable, given: str) -> float:
    """H(other | given) computed as H(joint) - H(marginal of ``given``)."""
    return joint_entropy(t) - entropy(marginal(t, check_axis(given)))


def transmission(t: JointTable) -> float:
    """Mutual information H(row) + H(col) - H(row, col)."""
    return entropy(marginal(t, ROW)) + entropy(marginal(t, COL)) - joint_entropy(t)


def max_entropy(n: int) -> float:
    if n < 1:
        raise ValueError("n must be at least 1")
    return float(np.log2(n))


def redundancy(d: LabeledDistribution) -> float:
    """1 - H / log2(n); a single-category distribution is fully redundant."""
    n = len(d)
    if n == 1:
        return 1.0
    return 1.0 - entropy(d) / max_entropy(n)


def _aligned(q, p) -> tuple[np.ndarray, np.ndarray, tuple]:
    if isinstance(q, JointTable) and isinstance(p, JointTable):
        if q.row_labels != p.row_labels or q.col_labels != p.col_labels:
            raise LabelError("posterior and prior labels differ")
        return q.cells, p.cells, (q.row_labels, q.col_labels)
    if isinstance(q, LabeledDistribution) and isinstance(p, LabeledDistribution):
        if q.labels != p.labels:
            raise LabelError("posterior and prior labels differ")
        return q.probs, p.probs, (q.labels,)
    raise LabelError("posterior and prior must be the same kind of table")


@dataclass(frozen=True, eq=False)
class CellTerms:
    """Per-cell contributions q log2(q/p), aligned with the input's labels."""

    labels: tuple
    values: np.ndarray

    @property
    def total(self) -> float:
        return float(self.values.sum())


def cell_terms(q, p) -> CellTerms:
    """Contribution of each cell to the expected information of q against p.

    Individual terms go negative where q < p; their sum never does.
    """
    qa, pa, labels = _aligned(q, p)
    support = qa > 0
    if np.any(support & (pa <= 0)):
        raise InfiniteSurpriseError("infinite surprise: posterior mass on a zero prior cell")
    values = np.zeros_like(qa)
    values[support] = qa[support] * np.log2(qa[support] / pa[support])
    values.setflags(write=False)
    return CellTerms(labels, values)


def expected_information(q, p) -> float:
    """Information I = sum q log2(q/p) of the message turning prior p into posterior q."""
    return cell_terms(q, p).total


@dataclass(frozen=True)
class GroupTerm:
    name: str
    weight: float
    within: float


@dataclass(frozen=True)
class GroupDecomposition:
    """Between-group entropy plus weighted within-group entropies."""

    between: float
    groups: tuple[GroupTerm, ...]

    @property
    def within(self) -> float:
        return sum(g.weight * g.within for g in self.groups)

    @property
    def total(self) -> float:
        return self.between + self.within


def group_decomposition(d: LabeledDistribution, part: Partition) -> GroupDecomposition:
    m = part.indicator(d.labels)
    weights = m @ d.probs
    terms = []
    for k, name in enumerate(part.groups):
        members = d.probs[m[k] > 0]
        within = _h(members / weights[k]) if weights[k] > 0 else 0.0
        terms.append(GroupTerm(name, float(weights[k]), within))
    return GroupDecomposition(_h(weights), tuple(terms))


def axis_summary(t: JointTable) -> dict[str, float]:
    """All static measures of a joint table, keyed by name."""
    h_row = entropy(marginal(t, ROW))
    h_col = entropy(marginal(t, COL))
    h_joint = joint_entropy(t)
    return {
        "h_row": h_row,
        "h_col": h_col,
        "h_joint": h_joint,
        "h_row_given_col": h_joint - h_col,
        "h_col_given_row": h_joint - h_row,
        "transmission": h_row + h_col - h_joint,
        "redundancy_row": redundancy(marginal(t, ROW)),
        "redundancy_col": redundancy(marginal(t, COL)),
    }

