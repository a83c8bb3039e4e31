"""Labeled probability tables: distributions, joint tables, conditionals, partitions.

Rows of a joint table are the structure axis (the cited side of a citation
matrix); columns are the action axis (the citing side).  All containers are
immutable: their arrays are copied on construction and flagged read-only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    DegenerateTableError,
    InfodynError,
    LabelError,
    NegativeCountError,
    UncoveredLabelError,
    UnknownLabelError,
)

ROW = "row"
COL = "col"

# Tolerance on the unit-sum invariant of every probability container.
SUM_TOL = 1e-12


def check_axis(axis: str) -> str:
    if axis not in (ROW, COL):
        raise ValueError(f"axis must be {ROW!r} or {COL!r}, got {axis!r}")
    return axis


def other_axis(axis: str) -> str:
    return COL if check_axis(axis) == ROW else ROW


def _frozen(values, ndim: int) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.ndim != ndim:
        raise InfodynError(f"expected a {ndim}-d array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InfodynError("non-finite entry")
    arr.setflags(write=False)
    return arr


def _labels(labels: Iterable, n: int, what: str) -> tuple[str, ...]:
    labels = tuple(labels)
    if len(labels) != n:
        raise LabelError(f"{len(labels)} {what} labels for {n} entries")
    if len(set(labels)) != len(labels):
        raise LabelError(f"duplicate {what} labels")
    return labels


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True, eq=False)
class LabeledDistribution:
    """A probability vector over named categories."""

    labels: tuple[str, ...]
    probs: np.ndarray

    def __post_init__(self):
        probs = _frozen(self.probs, 1)
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "labels", _labels(self.labels, probs.size, "category"))
        if np.any(probs < 0):
            raise InfodynError("negative probability")
        if abs(probs.sum() - 1.0) > SUM_TOL:
            raise InfodynError(f"probabilities sum to {probs.sum()!r}, not 1")

    @classmethod
    def from_weights(cls, weights: Sequence[float], labels: Iterable | None = None):
        w = np.asarray(weights, dtype=float)
        if np.any(w < 0):
            raise NegativeCountError("negative count")
        total = w.sum()
        if total <= 0:
            raise DegenerateTableError("degenerate table")
        if labels is None:
            labels = default_labels(w.size)
        return cls(tuple(labels), w / total)

    def __len__(self) -> int:
        return self.probs.size

    def __getitem__(self, label: str) -> float:
        return float(self.probs[self.labels.index(label)])

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.labels, self.probs.tolist()))


@dataclass(frozen=True, eq=False)
class JointTable:
    """Joint probabilities over (structure, action) label pairs."""

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    cells: np.ndarray

    def __post_init__(self):
        cells = _frozen(self.cells, 2)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "row_labels", _labels(self.row_labels, cells.shape[0], "row"))
        object.__setattr__(self, "col_labels", _labels(self.col_labels, cells.shape[1], "column"))
        if np.any(cells < 0):
            raise InfodynError("negative probability")
        if abs(cells.sum() - 1.0) > SUM_TOL:
            raise InfodynError(f"cells sum to {cells.sum()!r}, not 1")

    @classmethod
    def from_array(cls, cells, row_labels=None, col_labels=None) -> "JointTable":
        cells = np.asarray(cells, dtype=float)
        if row_labels is None:
            row_labels = default_labels(cells.shape[0])
        if col_labels is None:
            col_labels = default_labels(cells.shape[1])
        return cls(tuple(row_labels), tuple(col_labels), cells)

    @property
    def shape(self) -> tuple[int, int]:
        return self.cells.shape

    def labels(self, axis: str) -> tuple[str, ...]:
        return self.row_labels if check_axis(axis) == ROW else self.col_labels

    def transpose(self) -> "JointTable":
        return JointTable(self.col_labels, self.row_labels, self.cells.T)

    @property
    def T(self) -> "JointTable":
        return self.transpose()

    def reindex(self, row_labels: Sequence[str], col_labels: Sequence[str]) -> "JointTable":
        """Return the same table with its axes permuted to the given label order."""
        if set(row_labels) != set(self.row_labels) or set(col_labels) != set(self.col_labels):
            raise LabelError("label sets differ")
        ri = [self.row_labels.index(r) for r in row_labels]
        ci = [self.col_labels.index(c) for c in col_labels]
        return JointTable(tuple(row_labels), tuple(col_labels), self.cells[np.ix_(ri, ci)])


@dataclass(frozen=True, eq=False)
class ConditionalTable:
    """Conditional probabilities with one conditioning axis.

    With ``given="col"`` cell (i, j) holds p(row i | col j) and every column
    sums to one.  Slices whose conditioning marginal is zero are marked in
    ``empty`` and hold zeros.
    """

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    cells: np.ndarray
    given: str
    empty: np.ndarray

    def __post_init__(self):
        check_axis(self.given)
        cells = _frozen(self.cells, 2)
        empty = np.array(self.empty, dtype=bool)
        empty.setflags(write=False)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "empty", empty)
        object.__setattr__(self, "row_labels", _labels(self.row_labels, cells.shape[0], "row"))
        object.__setattr__(self, "col_labels", _labels(self.col_labels, cells.shape[1], "column"))
        sums = cells.sum(axis=0 if self.given == COL else 1)
        if empty.shape != sums.shape:
            raise InfodynError("empty mask does not match the conditioning axis")
        if np.any(np.abs(sums[~empty] - 1.0) > SUM_TOL) or np.any(sums[empty] != 0):
            raise InfodynError("conditional slices do not sum to 1")

    def slice(self, label: str) -> LabeledDistribution:
        """Distribution of the conditioned axis at one label of the conditioning axis."""
        if self.given == COL:
            k = self.col_labels.index(label)
            vec, labels = self.cells[:, k], self.row_labels
        else:
            k = self.row_labels.index(label)
            vec, labels = self.cells[k, :], self.col_labels
        if self.empty[k]:
            raise DegenerateTableError(f"slice {label!r} is empty")
        return LabeledDistribution(labels, vec)


@dataclass(frozen=True, eq=False)
class Partition:
    """Surjective map from category labels to group names.

    Groups are ordered by first appearance in ``assignments``.
    """

    assignments: Mapping[str, str]

    def __post_init__(self):
        items = tuple(self.assignments.items())
        if not items:
            raise InfodynError("partition has no groups")
        object.__setattr__(self, "assignments", dict(items))

    @classmethod
    def identity(cls, labels: Iterable[str]) -> "Partition":
        return cls({lab: lab for lab in labels})

    @classmethod
    def single(cls, labels: Iterable[str], name: str = "all") -> "Partition":
        return cls({lab: name for lab in labels})

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.assignments)

    @property
    def groups(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(self.assignments.values()))

    def members(self, group: str) -> tuple[str, ...]:
        return tuple(lab for lab, g in self.assignments.items() if g == group)

    def indicator(self, labels: Sequence[str]) -> np.ndarray:
        """0/1 matrix of shape (n_groups, len(labels)) mapping labels onto groups."""
        known = set(labels)
        for lab in self.assignments:
            if lab not in known:
                raise UnknownLabelError(f"unknown label {lab!r}")
        for lab in labels:
            if lab not in self.assignments:
                raise UncoveredLabelError(f"uncovered label {lab!r}")
        groups = self.groups
        pos = {g: k for k, g in enumerate(groups)}
        m = np.zeros((len(groups), len(labels)))
        for j, lab in enumerate(labels):
            m[pos[self.assignments[lab]], j] = 1.0
        return m


def normalize(counts, row_labels=None, col_labels=None) -> JointTable:
    """Turn a nonnegative count table into a joint probability table.

    ``counts`` is an array-like or any object with ``row_labels``,
    ``col_labels`` and ``cells`` attributes (e.g. a ``RawCountTable``).
    """
    if hasattr(counts, "cells"):
        row_labels = counts.row_labels if row_labels is None else row_labels
        col_labels = counts.col_labels if col_labels is None else col_labels
        counts = counts.cells
    c = np.asarray(counts, dtype=float)
    if c.ndim != 2:
        raise InfodynError(f"expected a 2-d table, got shape {c.shape}")
    if np.any(c < 0):
        raise NegativeCountError("negative count")
    total = c.sum()
    if not total > 0:
        raise DegenerateTableError("degenerate table")
    return JointTable.from_array(c / total, row_labels, col_labels)


def marginal(t: JointTable, axis: str) -> LabeledDistribution:
    """Marginal distribution of the row or column axis."""
    if check_axis(axis) == ROW:
        return LabeledDistribution(t.row_labels, t.cells.sum(axis=1))
    return LabeledDistribution(t.col_labels, t.cells.sum(axis=0))


def conditional(t: JointTable, given: str) -> ConditionalTable:
    """Divide the joint by the marginal of the conditioning axis."""
    check_axis(given)
    if given == COL:
        m = t.cells.sum(axis=0)
        empty = m == 0
        with np.errstate(divide="ignore", invalid="ignore"):
            cells = np.where(empty[None, :], 0.0, t.cells / m[None, :])
    else:
        m = t.cells.sum(axis=1)
        empty = m == 0
        with np.errstate(divide="ignore", invalid="ignore"):
            cells = np.where(empty[:, None], 0.0, t.cells / m[:, None])
    return ConditionalTable(t.row_labels, t.col_labels, cells, given, empty)


def aggregate(t: JointTable, part: Partition, axis: str) -> JointTable:
    """Sum rows (or columns) that share a group; group names become labels."""
    if check_axis(axis) == ROW:
        m = part.indicator(t.row_labels)
        return JointTable(part.groups, t.col_labels, m @ t.cells)
    m = part.indicator(t.col_labels)
    return JointTable(t.row_labels, part.groups, t.cells @ m.T)
