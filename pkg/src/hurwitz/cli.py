"""Command-line front end.

Exit status: 0 success, 1 usage error, 2 infeasible instance, 3 cross-check divergence.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from . import backends, fock_space
from .characters import character_table
from .errors import InfeasibleError
from .formatting import format_rational
from .monodromy_graphs import enumerate_graphs, export_dot, graph_weight
from .partitions import Partition, format_partition, parse_partition, partitions_of
from .series import assemble_series, series_log
from .symmetric_group import HurwitzInstance

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_DIVERGENCE = 0, 1, 2, 3

CHECK_BACKENDS = ("brute", "character", "class", "graphs", "fock", "closed")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class ComputationRequest:
    genus: int
    profile: Partition
    backend: str = "auto"
    connected: bool = True
    format: str = "text"


def render_result(req: ComputationRequest, inst: HurwitzInstance, backend: str, value: Fraction) -> str:
    if req.format == "json":
        return json.dumps({
            "genus": inst.genus,
            "profile": list(inst.profile),
            "degree": inst.degree,
            "branch_points": inst.branch_count,
            "connected": req.connected,
            "backend": backend,
            "value": format_rational(value),
        })
    kind = "h" if req.connected else "h*"
    return (
        f"{kind}(g={inst.genus}, mu=({format_partition(inst.profile)})) = {format_rational(value)}\n"
        f"d={inst.degree} n={inst.length} w={inst.branch_count} backend={backend}"
    )


def cmd_compute(req: ComputationRequest, debug: bool = False) -> tuple[int, str]:
    try:
        inst = HurwitzInstance(req.genus, req.profile)
        backend = backends.choose_backend(inst) if req.backend == "auto" else req.backend
        value = backends.compute(inst, backend, req.connected)
    except InfeasibleError as exc:
        if req.format == "json":
            return EXIT_INFEASIBLE, json.dumps({"error": "infeasible", "message": str(exc)})
        return EXIT_INFEASIBLE, f"infeasible: {exc}"
    if debug and backend == "fock":
        print(_fock_debug(inst.profile), file=sys.stderr)
    return EXIT_OK, render_result(req, inst, backend, value)


def _fock_debug(profile: Partition) -> str:
    lines = []
    v = fock_space.FockVector.vacuum()
    for part in profile:
        v = fock_space.apply_alpha(-part, v)
        lines.append(f"after alpha_{{-{part}}}: {len(v.support())} basis states")
    for lam in v.support():
        lines.append(f"  {format_partition(lam) or '()':>12}  {v[lam]!s:>5}  {fock_space.maya_diagram(lam)}")
    return "\n".join(lines)


@dataclass
class CheckRow:
    genus: int
    profile: Partition
    values: dict[str, Fraction] = field(default_factory=dict)
    skipped: list[str] = field(default_factory=list)

    def divergence(self) -> tuple[str, str] | None:
        for a, b in itertools.combinations(self.values, 2):
            if self.values[a] != self.values[b]:
                return a, b
        return None


def _check_instance(args: tuple[int, Partition, Sequence[str], str | None]) -> CheckRow:
    g, mu, names, corrupt = args
    row = CheckRow(g, mu)
    inst = HurwitzInstance(g, mu)
    for name in names:
        try:
            value = backends.compute(inst, name, connected=True)
        except InfeasibleError:
            row.skipped.append(name)
            continue
        if name == corrupt:
            value += 1
        row.values[name] = value
    return row


def run_check(
    dmax: int,
    gmax: int,
    names: Sequence[str] = CHECK_BACKENDS,
    corrupt: str | None = None,
    jobs: int = 1,
) -> list[CheckRow]:
    """Connected values of every backend on every ``(g, mu)``, ordered by ``d``, ``g``, partition."""
    work = [
        (g, mu, tuple(names), corrupt)
        for d in range(1, dmax + 1)
        for g in range(gmax + 1)
        for mu in partitions_of(d)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_check_instance, work))
    return [_check_instance(item) for item in work]


def format_check(rows: Sequence[CheckRow]) -> tuple[int, str]:
    lines = []
    bad = 0
    for row in rows:
        label = f"g={row.genus} mu=({format_partition(row.profile)})"
        div = row.divergence()
        if div is None:
            value = next(iter(row.values.values()), None)
            shown = format_rational(value) if value is not None else "-"
            lines.append(f"agree  {label}: {shown} [{', '.join(row.values)}]")
        else:
            bad += 1
            a, b = div
            lines.append(
                f"DIVERGE {label}: {a}={format_rational(row.values[a])} {b}={format_rational(row.values[b])}"
            )
    lines.append(f"{len(rows)} instances, {bad} divergent")
    return (EXIT_DIVERGENCE if bad else EXIT_OK), "\n".join(lines)


def _profile(text: str) -> Partition:
    try:
        mu = parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not mu:
        raise argparse.ArgumentTypeError("profile must be nonempty")
    return mu


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hurwitz", description="Exact single Hurwitz numbers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="one Hurwitz number")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--profile", type=_profile, required=True, help='e.g. "2,1,1" or "2,1^2"')
    p.add_argument("--backend", choices=backends.BACKENDS + ("auto",), default="auto")
    conn = p.add_mutually_exclusive_group()
    conn.add_argument("--connected", dest="connected", action="store_true", default=True)
    conn.add_argument("--disconnected", dest="connected", action="store_false")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--debug", action="store_true", help="print Fock-space supports and Maya diagrams")

    p = sub.add_parser("check", help="cross-check all backends")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--gmax", type=int, required=True)
    p.add_argument("--backends", default=",".join(CHECK_BACKENDS))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--corrupt", default=None, help=argparse.SUPPRESS)

    p = sub.add_parser("table", help="h(g, mu) for all mu of one degree")
    p.add_argument("--degree", "-d", type=int, required=True)
    p.add_argument("--gmax", type=int, required=True)
    p.add_argument("--backend", choices=backends.BACKENDS + ("auto",), default="auto")
    p.add_argument("--disconnected", action="store_true")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--plot", type=Path, default=None, help="write a PNG of log10 h against g")

    p = sub.add_parser("graphs", help="export monodromy graphs as DOT")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--profile", type=_profile, required=True)
    p.add_argument("--out", type=Path, default=None, help="directory for one .dot file per class")
    p.add_argument("--combined", type=Path, default=None, help="single .dot file with one cluster per class")

    p = sub.add_parser("chartable", help="character table as CSV")
    p.add_argument("--degree", "-d", type=int, required=True)

    p = sub.add_parser("series", help="dump a truncated generating function")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--wmax", type=int, required=True)
    p.add_argument("--backend", choices=("character", "class", "fock"), default="character")
    p.add_argument("--connected", action="store_true", help="dump log of the disconnected series")

    p = sub.add_parser("resolve", help="match the degree-5/6 small-degree formulas to profiles")
    p.add_argument("--gmax", type=int, default=3)
    p.add_argument("--out", type=Path, default=Path("resolution"))
    return parser


_NODE = re.compile(r"\b(inf\d+|end\d+|e\d+)\b")


def _combined_dot(graphs) -> str:
    lines = ["digraph monodromy {", "  rankdir=LR;"]
    for i, g in enumerate(graphs):
        body = export_dot(g, name=f"c{i}").splitlines()[2:-1]
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="class {i}: weight {format_rational(graph_weight(g))}";')
        lines.extend("  " + _NODE.sub(rf"c{i}_\1", line) for line in body)
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None, out: Callable[[str], None] = print) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args, out)
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


def _dispatch(args: argparse.Namespace, out: Callable[[str], None]) -> int:
    if args.command == "compute":
        req = ComputationRequest(args.genus, args.profile, args.backend, args.connected, args.format)
        try:
            HurwitzInstance(req.genus, req.profile)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        code, text = cmd_compute(req, debug=args.debug)
        out(text)
        return code

    if args.command == "check":
        names = [n for n in args.backends.split(",") if n]
        unknown = set(names) - set(backends.BACKENDS)
        if unknown:
            print(f"error: unknown backends {sorted(unknown)}", file=sys.stderr)
            return EXIT_USAGE
        rows = run_check(args.dmax, args.gmax, names, corrupt=args.corrupt, jobs=args.jobs)
        code, text = format_check(rows)
        out(text)
        return code

    if args.command == "table":
        from .report import plot_table, table_csv, value_table

        table = value_table(args.degree, args.gmax, args.backend, connected=not args.disconnected)
        if args.format == "csv":
            out(table_csv(table).rstrip("\n"))
        else:
            out(json.dumps({format_partition(mu): [format_rational(v) for v in row] for mu, row in table.items()}))
        if args.plot is not None:
            plot_table(table, args.plot, title=f"degree {args.degree}")
        return EXIT_OK

    if args.command == "graphs":
        graphs = enumerate_graphs(HurwitzInstance(args.genus, args.profile))
        for i, g in enumerate(graphs):
            events = " ".join(f"{e.kind}{e.consumed}->{e.produced}" for e in g.events)
            out(f"class {i}: weight {format_rational(graph_weight(g))} "
                f"contribution {format_rational(g.contribution)} | {events}")
        total = sum((g.contribution for g in graphs), Fraction(0))
        out(f"total {format_rational(total)}")
        if args.out is not None:
            args.out.mkdir(parents=True, exist_ok=True)
            for i, g in enumerate(graphs):
                (args.out / f"class_{i:03d}.dot").write_text(export_dot(g, name=f"class_{i}"))
        if args.combined is not None:
            args.combined.write_text(_combined_dot(graphs))
        return EXIT_OK

    if args.command == "chartable":
        out(character_table(args.degree).to_csv().rstrip("\n"))
        return EXIT_OK

    if args.command == "series":
        source = backends._DISCONNECTED[args.backend]
        s = assemble_series(source, args.dmax, args.wmax, connected=False)
        if args.connected:
            s = series_log(s)
        out(s.dump().rstrip("\n"))
        return EXIT_OK

    if args.command == "resolve":
        from .report import write_resolution_report

        resolutions = write_resolution_report(args.out, args.gmax)
        for res in resolutions:
            matched = ", ".join(f"({format_partition(m)})" for m in res.matches) or "none"
            out(f"{res.profile_id}: matches {matched}")
        out(f"report written to {args.out}")
        return EXIT_OK if all(len(r.matches) == 1 for r in resolutions) else EXIT_DIVERGENCE

    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
