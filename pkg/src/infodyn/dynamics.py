"""Iterated structure/action updates and the entropy they produce.

Each step, actors draw action events conditioned by the current structure,
and the structure is then re-read through the realized actions.  The state
after the step is the a-posteriori joint table, which becomes the prior of
the next step.

Generative model of one step (``p`` is the current joint, rows A, cols B):

1. For each actor in turn, draw ``sample_size`` events: the structure state
   i from p(A), then the action j from p(B|A=i).  With probability
   ``freedom`` the action is instead drawn uniformly over the actions row i
   admits (the support of p(B|A=i)); this is the actor's unconditioned
   share of uncertainty.  Events of all actors are pooled into one count
   table ``n``.
2. ``coupled`` mode: the structure marginal is re-read through the realized
   action frequencies f(B) and the prior kernel p(A|B),
   ``q(A) = (1 - blend) p(A) + blend * sum_j f_j p(A|B=j)``, and each
   sampled row's action conditional is blended with its realized one,
   ``q(B|A=i) = (1 - blend) p(B|A=i) + blend * n_ij / n_i``.
   The new joint is ``q(A) q(B|A)``.
3. ``fixed_kernel`` mode holds p(A|B) constant and only re-weights the
   action marginal, ``q(B) = (1 - blend) p(B) + blend * f(B)``.  Iterating
   it is a Markov chain on the action marginal.

Random draw order within a step: for each actor, one multinomial over rows;
then for each row with a positive count in ascending order, one binomial
for the free share, one multinomial for the conditioned actions and one
multinomial for the free actions.  One ``numpy.random.Generator`` (PCG64)
seeded from ``SimulationConfig.seed`` feeds every step.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field, fields
from typing import Union

import numpy as np
from scipy.optimize import brentq

from .contingency import update_information
from .measures import (
    MBITS_PER_BIT,
    conditional_entropy,
    entropy,
    max_entropy,
    plogp,
    redundancy,
    transmission,
)
from .tables import COL, ROW, JointTable, marginal

MODES = ("coupled", "fixed_kernel")
TRAJECTORY_HEADER = ("step", "h_a", "h_a_given_b", "transmission", "update_info", "redundancy")


@dataclass(frozen=True)
class SimulationConfig:
    n_structure: int = 4
    n_action: int = 4
    n_actors: int = 1
    steps: int = 100
    sample_size: int = 100
    seed: int = 0
    initial_joint: Union[JointTable, str] = "uniform"
    freedom: float = 0.1
    blend: float = 0.5
    mode: str = "coupled"

    def __post_init__(self):
        for name in ("n_structure", "n_action", "n_actors", "sample_size"):
            if int(getattr(self, name)) < 1:
                raise ValueError(f"{name} must be at least 1")
        if self.steps < 0:
            raise ValueError("steps must be nonnegative")
        if not 0.0 <= self.freedom <= 1.0:
            raise ValueError("freedom must lie in [0, 1]")
        if not 0.0 <= self.blend <= 1.0:
            raise ValueError("blend must lie in [0, 1]")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if isinstance(self.initial_joint, JointTable):
            if self.initial_joint.shape != (self.n_structure, self.n_action):
                raise ValueError("initial_joint shape does not match n_structure x n_action")
        elif self.initial_joint != "uniform":
            raise ValueError("initial_joint must be a JointTable or 'uniform'")

    def initial_state(self) -> JointTable:
        if isinstance(self.initial_joint, JointTable):
            return self.initial_joint
        n = self.n_structure * self.n_action
        return _labeled(np.full((self.n_structure, self.n_action), 1.0 / n))


@dataclass(frozen=True)
class StepRecord:
    h_a: float
    h_a_given_b: float
    transmission: float
    update_info: float
    redundancy: float


@dataclass(frozen=True)
class Trajectory:
    config: SimulationConfig
    records: tuple[StepRecord, ...]
    final: JointTable = field(repr=False)

    def __len__(self) -> int:
        return len(self.records)

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(r, name) for r in self.records])

    def summary(self) -> dict[str, float]:
        h_a = self.column("h_a")
        return {
            "initial_h_a": float(h_a[0]),
            "final_h_a": float(h_a[-1]),
            "max_h_a": float(h_a.max()),
            "mean_update_info": float(self.column("update_info")[1:].mean()) if len(self) > 1 else 0.0,
        }

    def to_csv(self, unit: str = "bits") -> str:
        """One row per step; entropies in ``unit``, redundancy as a fraction."""
        scale, digits = (MBITS_PER_BIT, 4) if unit == "mbits" else (1.0, 7)
        buf = io.StringIO()
        buf.write(",".join(TRAJECTORY_HEADER) + "\n")
        for k, r in enumerate(self.records):
            vals = [r.h_a, r.h_a_given_b, r.transmission, r.update_info]
            cells = [f"{v * scale:.{digits}f}" for v in vals] + [f"{r.redundancy:.7f}"]
            buf.write(f"{k}," + ",".join(cells) + "\n")
        return buf.getvalue()


def _labeled(cells: np.ndarray) -> JointTable:
    n_a, n_b = cells.shape
    return JointTable(
        tuple(f"A{i}" for i in range(n_a)),
        tuple(f"B{j}" for j in range(n_b)),
        cells / cells.sum(),
    )


def _record(state: JointTable, update_info: float) -> StepRecord:
    p_a = marginal(state, ROW)
    return StepRecord(
        h_a=entropy(p_a),
        h_a_given_b=conditional_entropy(state, given=COL),
        transmission=transmission(state),
        update_info=update_info,
        redundancy=redundancy(p_a),
    )


def _draw(p: np.ndarray, config: SimulationConfig, rng: np.random.Generator) -> np.ndarray:
    n_a, n_b = p.shape
    p_a = p.sum(axis=1)
    p_a = p_a / p_a.sum()
    counts = np.zeros((n_a, n_b))
    rows = np.flatnonzero(p_a > 0)
    cond = np.zeros_like(p)
    cond[rows] = p[rows] / p[rows].sum(axis=1, keepdims=True)
    admits = cond > 0
    for _ in range(config.n_actors):
        per_row = rng.multinomial(config.sample_size, p_a)
        for i in np.flatnonzero(per_row):
            c = int(per_row[i])
            free = int(rng.binomial(c, config.freedom))
            counts[i] += rng.multinomial(c - free, cond[i])
            counts[i] += rng.multinomial(free, admits[i] / admits[i].sum())
    return counts


def step(state: JointTable, config: SimulationConfig, rng: np.random.Generator):
    """Advance one update cycle; returns the posterior joint and its record."""
    p = state.cells
    counts = _draw(p, config, rng)
    lam = config.blend
    p_a, p_b = p.sum(axis=1), p.sum(axis=0)
    f_b = counts.sum(axis=0) / counts.sum()
    live = p_b > 0
    kernel = np.zeros_like(p)
    kernel[:, live] = p[:, live] / p_b[live]
    if config.mode == "fixed_kernel":
        q = kernel * ((1 - lam) * p_b + lam * f_b)[None, :]
    else:
        q_a = (1 - lam) * p_a + lam * kernel @ f_b
        n_i = counts.sum(axis=1)
        cond = np.zeros_like(p)
        alive = p_a > 0
        cond[alive] = p[alive] / p_a[alive, None]
        sampled = n_i > 0
        cond[sampled] = (1 - lam) * cond[sampled] + lam * counts[sampled] / n_i[sampled, None]
        q = q_a[:, None] * cond
    posterior = JointTable(state.row_labels, state.col_labels, q / q.sum())
    return posterior, _record(posterior, update_information(state, posterior))


def simulate(config: SimulationConfig) -> Trajectory:
    rng = np.random.default_rng(config.seed)
    state = config.initial_state()
    records = [_record(state, 0.0)]
    for _ in range(config.steps):
        state, rec = step(state, config, rng)
        records.append(rec)
    return Trajectory(config, tuple(records), state)


def structured_joint(n_structure: int, n_action: int, h_a: float, coupling: float = 0.7) -> JointTable:
    """A coupled joint table whose structure marginal has entropy ``h_a`` bits.

    The structure marginal puts mass ``a`` on A0 and spreads the rest evenly;
    row i sends ``coupling`` of its actions to B(i mod n_action) and spreads
    the remainder evenly over the other actions.
    """
    h_max = max_entropy(n_structure)
    if not 0.0 <= h_a <= h_max + 1e-12:
        raise ValueError(f"h_a must lie in [0, {h_max}]")

    def marg(a):
        rest = (1 - a) / (n_structure - 1) if n_structure > 1 else 0.0
        return np.array([a] + [rest] * (n_structure - 1))

    if n_structure == 1 or h_a >= h_max - 1e-12:
        p_a = np.full(n_structure, 1.0 / n_structure)
    elif h_a <= 0:
        p_a = marg(1.0)
    else:
        a = brentq(lambda a: -plogp(marg(a)).sum() - h_a, 1.0 / n_structure, 1.0)
        p_a = marg(a)
    if n_action == 1:
        cond = np.ones((n_structure, 1))
    else:
        cond = np.full((n_structure, n_action), (1 - coupling) / (n_action - 1))
        for i in range(n_structure):
            cond[i, i % n_action] = coupling
    return _labeled(p_a[:, None] * cond)


def config_dict(config: SimulationConfig) -> dict:
    out = {f.name: getattr(config, f.name) for f in fields(config) if f.name != "initial_joint"}
    out["initial_joint"] = "uniform" if config.initial_joint == "uniform" else "table"
    return out
