"""Predict next period's transmission from this period's structure.

The two synthetic 13x13 citation matrices stand in for consecutive years.
The prediction is made at three resolutions: all journals, journals grouped
on the cited side, and a 3x3 design with both sides grouped.

Run with ``python3 demos/02_year_pair_prediction.py``.
"""

from infodyn import normalize, year_pair_analysis
from infodyn.data import synthetic_year_path, table1_groups_path
from infodyn.ingest import read_matrix, read_partition


def show(title, report):
    print(title)
    print(f"  T prior      {report.t_prior * 1000:9.2f} mbits")
    print(f"  T posterior  {report.t_posterior * 1000:9.2f} mbits")
    print(f"  prediction   {report.prediction * 1000:9.2f} mbits")
    print(f"  update info  {report.update_info * 1000:9.2f} mbits")
    if report.coverage is None:
        print("  coverage     undefined (no change)")
    else:
        print(f"  coverage     {report.coverage:9.3f}")


def main():
    # Missing cells (counts below 5 in the source) are filled with 5.
    prior = normalize(read_matrix(synthetic_year_path(1984)))
    posterior = normalize(read_matrix(synthetic_year_path(1985)))
    groups = read_partition(table1_groups_path())

    show("13 x 13", year_pair_analysis(prior, posterior, allow_no_change=True))
    show("3 x 13", year_pair_analysis(prior, posterior, row_part=groups, allow_no_change=True))
    show("3 x 3", year_pair_analysis(prior, posterior, groups, groups, allow_no_change=True))


if __name__ == "__main__":
    main()
