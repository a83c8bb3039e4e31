"""Bayesian structure/action update between a prior and a posterior joint table.

Rows are structure (A), columns are action (B).  ``prior`` holds p at time t,
``posterior`` holds q at time t + 1.  Every sum runs over the posterior's
support and uses the posterior joint cells q_ij as weights.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .errors import (
    DecompositionUndefinedError,
    InfiniteSurpriseError,
    LabelError,
    NoTransmissionChangeError,
)
from .measures import plogp, transmission
from .tables import (
    COL,
    ROW,
    ConditionalTable,
    JointTable,
    Partition,
    aggregate,
    conditional,
)


def align(prior: JointTable, posterior: JointTable) -> JointTable:
    """Return ``posterior`` with its labels in the prior's order."""
    if posterior.row_labels == prior.row_labels and posterior.col_labels == prior.col_labels:
        return posterior
    try:
        return posterior.reindex(prior.row_labels, prior.col_labels)
    except LabelError:
        raise LabelError("prior and posterior label sets differ") from None


def _margins(t: JointTable) -> tuple[np.ndarray, np.ndarray]:
    return t.cells.sum(axis=1), t.cells.sum(axis=0)


def bayes_posterior(prior: JointTable) -> ConditionalTable:
    """q(A|B) = p(A) p(B|A) / p(B), column-conditional form of the prior."""
    p_a, p_b = _margins(prior)
    b_given_a = conditional(prior, given=ROW).cells
    empty = p_b == 0
    with np.errstate(divide="ignore", invalid="ignore"):
        cells = np.where(empty[None, :], 0.0, p_a[:, None] * b_given_a / p_b[None, :])
    return ConditionalTable(prior.row_labels, prior.col_labels, cells, COL, empty)


def _posterior_terms(prior: JointTable, posterior: JointTable):
    q = align(prior, posterior).cells
    support = q > 0
    q_b = q.sum(axis=0)
    qc = np.zeros_like(q)
    with np.errstate(divide="ignore", invalid="ignore"):
        qc[support] = (q / q_b[None, :])[support]
    return q, support, qc


def update_information(prior: JointTable, posterior: JointTable) -> float:
    """Information of the message that updates structure after action.

    sum_ij q_ij log2(q(A_i|B_j) / p(A_i)), a q(B)-weighted mixture of
    divergences, hence never negative.
    """
    q, support, qc = _posterior_terms(prior, posterior)
    p_a = prior.cells.sum(axis=1)
    pa = np.broadcast_to(p_a[:, None], q.shape)
    if np.any(support & (pa <= 0)):
        raise InfiniteSurpriseError("infinite surprise: posterior mass on an empty prior row")
    return float(np.sum(q[support] * np.log2(qc[support] / pa[support])))


def _check_prior_support(prior: JointTable, support: np.ndarray) -> None:
    if np.any(support & (prior.cells <= 0)):
        raise InfiniteSurpriseError("infinite surprise: posterior mass on an empty prior cell")


def dynamic_prediction(prior: JointTable, posterior: JointTable) -> float:
    """Posterior-weighted prior pointwise transmission: sum q_ij log2(p_ij / (p_i. p_.j)).

    With posterior == prior this is the static transmission of the prior.
    """
    q, support, _ = _posterior_terms(prior, posterior)
    _check_prior_support(prior, support)
    r = normalization_ratio(prior).cells
    return float(np.sum(q[support] * np.log2(r[support])))


def update_components(prior: JointTable, posterior: JointTable) -> tuple[float, float]:
    """The two logarithmic terms whose difference is the dynamic prediction.

    Returns ``(i_ab_b, i_ab_ba)`` with
    i_ab_b = sum q log2(q(A|B) / p(B)) and
    i_ab_ba = sum q log2(q(A|B) / p(B|A)).
    """
    q, support, qc = _posterior_terms(prior, posterior)
    _check_prior_support(prior, support)
    p_a, p_b = _margins(prior)
    pb = np.broadcast_to(p_b[None, :], q.shape)[support]
    b_given_a = (prior.cells / np.where(p_a > 0, p_a, 1.0)[:, None])[support]
    w, c = q[support], qc[support]
    i_ab_b = float(np.sum(w * np.log2(c / pb)))
    i_ab_ba = float(np.sum(w * np.log2(c / b_given_a)))
    return i_ab_b, i_ab_ba


@dataclass(frozen=True, eq=False)
class RatioTable:
    """Cells r_ij = p(B_j|A_i) / p(B_j); ``empty`` marks cells with a zero marginal."""

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    cells: np.ndarray
    empty: np.ndarray


def normalization_ratio(prior: JointTable) -> RatioTable:
    p_a, p_b = _margins(prior)
    empty = (p_a[:, None] == 0) | (p_b[None, :] == 0)
    with np.errstate(divide="ignore", invalid="ignore"):
        cells = np.where(empty, 0.0, prior.cells / p_a[:, None] / p_b[None, :])
    cells.setflags(write=False)
    empty.setflags(write=False)
    return RatioTable(prior.row_labels, prior.col_labels, cells, empty)


@dataclass(frozen=True)
class PosteriorDecomposition:
    """Term report of the a-posteriori uncertainty expansion.

    ``residual`` is lhs minus the four right-hand terms, reported as computed.
    """

    lhs: float
    h_a: float
    h_ratio: float
    term3: float
    term4: float
    residual: float

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


def posterior_decomposition(prior: JointTable) -> PosteriorDecomposition:
    """Expand the uncertainty of the Bayes posterior conditional into prior terms.

    Sums run over the prior's nonzero cells; the row-marginal entropy runs
    over rows.
    """
    p_a, p_b = _margins(prior)
    if np.any(p_a == 0) or np.any(p_b == 0):
        raise DecompositionUndefinedError("decomposition undefined on empty slice")
    support = prior.cells > 0
    qc = (prior.cells / p_b[None, :])[support]
    r = (prior.cells / p_a[:, None] / p_b[None, :])[support]
    pa = np.broadcast_to(p_a[:, None], prior.shape)[support]
    lhs = float(-plogp(qc).sum())
    h_a = float(-plogp(p_a).sum())
    h_ratio = float(-plogp(r).sum())
    term3 = float(np.sum(pa * np.log2(pa / qc)))
    term4 = float(np.sum(r * np.log2(r / qc)))
    residual = lhs - (h_a + h_ratio + term3 + term4)
    return PosteriorDecomposition(lhs, h_a, h_ratio, term3, term4, residual)


def coverage_ratio(t_prior: float, t_posterior: float, prediction: float) -> float:
    """Share of the observed change in transmission accounted for by the prediction."""
    change = t_posterior - t_prior
    if change == 0:
        raise NoTransmissionChangeError("no transmission change")
    return (prediction - t_prior) / change


@dataclass(frozen=True)
class UpdateReport:
    t_prior: float
    t_posterior: float
    prediction: float
    update_info: float
    i_ab_b: float
    i_ab_ba: float
    coverage: Optional[float]

    def as_dict(self) -> dict:
        return asdict(self)


def year_pair_analysis(
    prior: JointTable,
    posterior: JointTable,
    row_part: Partition | None = None,
    col_part: Partition | None = None,
    allow_no_change: bool = False,
) -> UpdateReport:
    """Compare two periods after grouping both tables identically.

    If the transmission did not change, raises ``NoTransmissionChangeError``
    unless ``allow_no_change`` is set, in which case ``coverage`` is None.
    """
    if row_part is not None:
        prior, posterior = aggregate(prior, row_part, ROW), aggregate(posterior, row_part, ROW)
    if col_part is not None:
        prior, posterior = aggregate(prior, col_part, COL), aggregate(posterior, col_part, COL)
    posterior = align(prior, posterior)
    t_prior = transmission(prior)
    t_post = transmission(posterior)
    prediction = dynamic_prediction(prior, posterior)
    i_ab_b, i_ab_ba = update_components(prior, posterior)
    try:
        coverage = coverage_ratio(t_prior, t_post, prediction)
    except NoTransmissionChangeError:
        if not allow_no_change:
            raise
        coverage = None
    return UpdateReport(
        t_prior=t_prior,
        t_posterior=t_post,
        prediction=prediction,
        update_info=update_information(prior, posterior),
        i_ab_b=i_ab_b,
        i_ab_ba=i_ab_ba,
        coverage=coverage,
    )
