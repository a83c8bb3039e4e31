"""Regenerate the synthetic 13-journal citation matrices shipped in infodyn/data.

The real 1984/1985 citation counts are not available; these tables follow
the three-group block structure of the journal set, with counts below the
printed cutoff of five left empty (missing).
"""

from pathlib import Path

import numpy as np

from infodyn.ingest import read_partition

DATA = Path(__file__).resolve().parents[1] / "src" / "infodyn" / "data"
CUTOFF = 5


def block_counts(labels, groups, rng, within, between, self_cite, size):
    n = len(labels)
    base = np.full((n, n), between)
    for i in range(n):
        for j in range(n):
            if groups[labels[i]] == groups[labels[j]]:
                base[i, j] = within
        base[i, i] = self_cite
    scale = rng.lognormal(mean=0.0, sigma=0.8, size=n)
    rates = base * np.outer(scale, scale) * size
    return rng.poisson(rates)


def write(path, labels, counts):
    lines = ["," + ",".join(labels)]
    for lab, row in zip(labels, counts):
        fields = ["" if c < CUTOFF else str(int(c)) for c in row]
        lines.append(lab + "," + ",".join(fields))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main():
    part = read_partition(DATA / "table1_groups.csv")
    labels = list(part.labels)
    groups = part.assignments
    rng = np.random.default_rng(1984)
    prior = block_counts(labels, groups, rng, within=6.0, between=0.6, self_cite=20.0, size=40)
    rng = np.random.default_rng(1985)
    growth = rng.lognormal(mean=0.05, sigma=0.1, size=prior.shape)
    posterior = rng.poisson(prior * growth)
    write(DATA / "synthetic_1984.csv", labels, prior)
    write(DATA / "synthetic_1985.csv", labels, posterior)


if __name__ == "__main__":
    main()
