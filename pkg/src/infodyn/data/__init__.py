"""Bundled fixtures: the 13-journal grouping and two synthetic citation years."""

from importlib import resources
from pathlib import Path


def path(name: str) -> Path:
    return Path(str(resources.files(__name__).joinpath(name)))


def table1_groups_path() -> Path:
    return path("table1_groups.csv")


def synthetic_year_path(year: int) -> Path:
    if year not in (1984, 1985):
        raise ValueError("synthetic matrices exist for 1984 and 1985 only")
    return path(f"synthetic_{year}.csv")
