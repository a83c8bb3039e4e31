"""Command line interface: ``infodyn <info|predict|decompose|simulate>``.

JSON reports have the keys ``command``, ``inputs``, ``unit``, ``results``
and, where applicable, ``breakdown``, always in that order.  Every numeric
result is an object ``{"value": ..., "unit": ...}``.  Information values
are rounded to 7 decimals in bits or 4 in mbits; dimensionless values to 7.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .contingency import posterior_decomposition, year_pair_analysis
from .dynamics import MODES, SimulationConfig, simulate
from .errors import InfodynError
from .ingest import DEFAULT_FILL, parse_missing, read_matrix, read_partition
from .measures import MBITS_PER_BIT, axis_summary, group_decomposition
from .tables import COL, ROW, JointTable, LabeledDistribution, marginal, normalize

INFO_UNITS = ("bits", "mbits")


@dataclass
class Report:
    command: str
    unit: str
    inputs: list = field(default_factory=list)
    results: dict = field(default_factory=dict)
    breakdown: list | None = None

    def _num(self, value: float, unit: str) -> dict:
        if unit == "count":
            return {"value": int(value), "unit": unit}
        if unit == "mbits":
            value = round(value * MBITS_PER_BIT, 4)
        else:
            value = round(value, 7)
        # + 0.0 turns -0.0 into 0.0
        return {"value": value + 0.0, "unit": unit}

    def info(self, name: str, value: float) -> None:
        self.results[name] = self._num(value, self.unit)

    def ratio(self, name: str, value: float, unit: str = "ratio") -> None:
        self.results[name] = self._num(value, unit)

    def add_input(self, path) -> None:
        data = Path(path).read_bytes()
        self.inputs.append({"path": str(path), "sha256": hashlib.sha256(data).hexdigest()})

    def as_dict(self) -> dict:
        out = {"command": self.command, "inputs": self.inputs, "unit": self.unit, "results": self.results}
        if self.breakdown is not None:
            out["breakdown"] = self.breakdown
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_table(self) -> str:
        lines = [f"command: {self.command}"]
        lines += [f"input: {i['path']} sha256:{i['sha256']}" for i in self.inputs]
        lines.append(f"unit: {self.unit}")
        width = max([len(k) for k in self.results] + [8])
        for name, v in self.results.items():
            lines.append(f"{name:<{width}}  {_fmt(v)}")
        for row in self.breakdown or []:
            label = row.get("group") or row.get("cell", "")
            parts = [f"{k}={_fmt(v)}" for k, v in row.items() if isinstance(v, dict)]
            lines.append(f"  {label}: " + ", ".join(parts))
        return "\n".join(lines) + "\n"


def _fmt(entry: dict) -> str:
    value, unit = entry["value"], entry["unit"]
    if unit == "count":
        return f"{value} {unit}"
    digits = 4 if unit == "mbits" else 7
    return f"{value:.{digits}f} {unit}"


def _load_table(path, fill) -> JointTable:
    return normalize(read_matrix(path, fill=fill))


def cmd_info(args) -> Report:
    rep = Report("info", args.unit)
    table = _load_table(args.matrix, args.fill)
    rep.add_input(args.matrix)
    for name, value in axis_summary(table).items():
        if name.startswith("redundancy"):
            rep.ratio(name, value, "fraction")
        else:
            rep.info(name, value)
    return rep


def cmd_predict(args) -> Report:
    rep = Report("predict", args.unit)
    prior = _load_table(args.prior, args.fill)
    posterior = _load_table(args.posterior, args.fill)
    rep.add_input(args.prior)
    rep.add_input(args.posterior)
    row_part = col_part = None
    if args.row_groups:
        row_part = read_partition(args.row_groups)
        rep.add_input(args.row_groups)
    if args.col_groups:
        col_part = read_partition(args.col_groups)
        rep.add_input(args.col_groups)
    report = year_pair_analysis(prior, posterior, row_part, col_part, allow_no_change=True)
    n_rows = len(row_part.groups) if row_part else len(prior.row_labels)
    n_cols = len(col_part.groups) if col_part else len(prior.col_labels)
    rep.ratio("rows", n_rows, "count")
    rep.ratio("cols", n_cols, "count")
    for name in ("t_prior", "t_posterior", "prediction", "update_info", "i_ab_b", "i_ab_ba"):
        rep.info(name, getattr(report, name))
    if report.coverage is not None:
        rep.ratio("coverage", report.coverage)
    return rep


def _distribution(table: JointTable, axis: str) -> LabeledDistribution:
    if table.shape[0] == 1:
        return marginal(table, COL)
    if table.shape[1] == 1:
        return marginal(table, ROW)
    return marginal(table, axis)


def cmd_decompose(args) -> Report:
    rep = Report("decompose", args.unit)
    table = _load_table(args.input, args.fill)
    rep.add_input(args.input)
    if args.eq17:
        dec = posterior_decomposition(table)
        for name, value in dec.as_dict().items():
            rep.info(name, value)
        return rep
    if not args.groups:
        raise InfodynError("decompose needs --groups FILE or --eq17")
    part = read_partition(args.groups)
    rep.add_input(args.groups)
    dec = group_decomposition(_distribution(table, args.axis), part)
    rep.info("total", dec.total)
    rep.info("between", dec.between)
    rep.info("within", dec.within)
    rep.breakdown = [
        {
            "group": g.name,
            "weight": rep._num(g.weight, "probability"),
            "within": rep._num(g.within, rep.unit),
        }
        for g in dec.groups
    ]
    return rep


def cmd_simulate(args) -> Report:
    rep = Report("simulate", args.unit)
    initial = "uniform"
    if args.initial:
        initial = _load_table(args.initial, args.fill)
        rep.add_input(args.initial)
    config = SimulationConfig(
        n_structure=args.n_structure,
        n_action=args.n_action,
        n_actors=args.actors,
        steps=args.steps,
        sample_size=args.samples,
        seed=args.seed,
        initial_joint=initial,
        freedom=args.freedom,
        blend=args.blend,
        mode=args.mode,
    )
    traj = simulate(config)
    Path(args.trajectory).write_text(traj.to_csv(args.unit), encoding="utf-8", newline="\n")
    rep.ratio("rows", len(traj), "count")
    for name, value in traj.summary().items():
        rep.info(name, value)
    return rep


def _missing(text: str):
    try:
        return parse_missing(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--unit", choices=INFO_UNITS, default="bits")
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument(
        "--missing",
        dest="fill",
        type=_missing,
        default=DEFAULT_FILL,
        metavar="{fill:K,error}",
        help="replace missing matrix cells with K (default fill:5) or fail",
    )

    parser = argparse.ArgumentParser(prog="infodyn", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="entropies and transmission of a matrix")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("predict", parents=[common], help="dynamic prediction between two periods")
    p.add_argument("prior")
    p.add_argument("posterior")
    p.add_argument("--row-groups", metavar="FILE")
    p.add_argument("--col-groups", metavar="FILE")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("decompose", parents=[common], help="grouping or a-posteriori decomposition")
    p.add_argument("input")
    p.add_argument("--groups", metavar="FILE")
    p.add_argument("--axis", choices=(ROW, COL), default=ROW)
    p.add_argument("--eq17", action="store_true", help="report the a-posteriori uncertainty terms")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("simulate", parents=[common], help="iterated update simulation")
    p.add_argument("--n-structure", type=_positive, default=4)
    p.add_argument("--n-action", type=_positive, default=4)
    p.add_argument("--actors", type=_positive, default=1)
    p.add_argument("--steps", type=_nonnegative, default=100)
    p.add_argument("--samples", type=_positive, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--freedom", type=float, default=0.1)
    p.add_argument("--blend", type=float, default=0.5)
    p.add_argument("--mode", choices=MODES, default="coupled")
    p.add_argument("--initial", metavar="FILE", help="initial joint table (default uniform)")
    p.add_argument("--trajectory", metavar="FILE", default="trajectory.csv")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (InfodynError, ValueError, OSError) as exc:
        print(f"infodyn: error: {exc}", file=sys.stderr)
        return 1
    out = report.to_json() if args.format == "json" else report.to_table()
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
