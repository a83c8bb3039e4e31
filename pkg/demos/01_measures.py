"""Entropy, transmission and expected information on small tables.

Run with ``python3 demos/01_measures.py``.
"""

import numpy as np

from infodyn import (
    COL,
    ROW,
    JointTable,
    LabeledDistribution,
    cell_terms,
    conditional_entropy,
    entropy,
    expected_information,
    joint_entropy,
    marginal,
    redundancy,
    transmission,
)


def describe(name, table):
    print(f"{name}")
    print(f"  H(rows)        = {entropy(marginal(table, ROW)):.4f} bits")
    print(f"  H(cols)        = {entropy(marginal(table, COL)):.4f} bits")
    print(f"  H(rows, cols)  = {joint_entropy(table):.4f} bits")
    print(f"  H(rows | cols) = {conditional_entropy(table, COL):.4f} bits")
    print(f"  transmission   = {transmission(table) * 1000:.3f} mbits")
    print(f"  redundancy     = {redundancy(marginal(table, ROW)):.4f}")


def main():
    labels = (["a", "b"], ["x", "y"])
    independent = JointTable.from_array(np.full((2, 2), 0.25), *labels)
    coupled = JointTable.from_array([[0.4, 0.1], [0.1, 0.4]], *labels)
    locked = JointTable.from_array([[0.5, 0.0], [0.0, 0.5]], *labels)

    # Coupling moves probability onto the diagonal, which shrinks the joint
    # uncertainty while both margins stay uniform.
    for name, table in [("independent", independent), ("coupled", coupled), ("locked", locked)]:
        describe(name, table)

    prior = LabeledDistribution(("a", "b"), [0.25, 0.75])
    posterior = LabeledDistribution(("a", "b"), [0.5, 0.5])
    terms = cell_terms(posterior, prior)
    print("\nmessage turning (0.25, 0.75) into (0.5, 0.5)")
    for label, value in zip(terms.labels[0], terms.values):
        print(f"  term {label}: {value:+.4f} bits")
    # Single terms can be negative; their sum never is.
    print(f"  total: {expected_information(posterior, prior):.4f} bits")


if __name__ == "__main__":
    main()
