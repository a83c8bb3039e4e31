"""Split the entropy of a citation margin into between- and within-group parts.

Run with ``python3 demos/03_grouping.py``.
"""

from infodyn import ROW, Partition, group_decomposition, marginal, normalize
from infodyn.data import synthetic_year_path, table1_groups_path
from infodyn.ingest import read_matrix, read_partition


def main():
    table = normalize(read_matrix(synthetic_year_path(1984)))
    cited = marginal(table, ROW)
    groups = read_partition(table1_groups_path())

    dec = group_decomposition(cited, groups)
    print(f"H(cited) = {dec.total:.4f} bits")
    print(f"  between groups: {dec.between:.4f}")
    for g in dec.groups:
        print(f"  {g.name:<20} P = {g.weight:.3f}  H = {g.within:.4f}")

    # The two extreme partitions bracket the between-group term.
    one = group_decomposition(cited, Partition.single(cited.labels))
    each = group_decomposition(cited, Partition.identity(cited.labels))
    print(f"\none group:      between = {one.between:.4f}, total = {one.total:.4f}")
    print(f"every journal:  between = {each.between:.4f}, total = {each.total:.4f}")


if __name__ == "__main__":
    main()
