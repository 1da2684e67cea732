"""Reports: value tables, the small-degree formula resolution, and their figures.

Figures are written with the Agg backend so nothing needs a display.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .backends import compute  # noqa: E402
from .closed_forms import SMALL_DEGREE_BASES, SMALL_DEGREE_FORMULAS, hurwitz_small_degree  # noqa: E402
from .formatting import format_rational  # noqa: E402
from .partitions import Partition, format_partition, partitions_of  # noqa: E402
from .symmetric_group import HurwitzInstance  # noqa: E402


def value_table(d: int, gmax: int, backend: str = "auto", connected: bool = True) -> dict[Partition, list[Fraction]]:
    return {
        mu: [compute(HurwitzInstance(g, mu), backend, connected) for g in range(gmax + 1)]
        for mu in partitions_of(d)
    }


def table_csv(table: dict[Partition, list[Fraction]]) -> str:
    gmax = len(next(iter(table.values()))) - 1
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["profile"] + [f"g={g}" for g in range(gmax + 1)])
    for mu, row in table.items():
        writer.writerow([format_partition(mu)] + [format_rational(v) for v in row])
    return buf.getvalue()


def plot_table(table: dict[Partition, list[Fraction]], path: Path, title: str = "") -> Path:
    fig, ax = plt.subplots(figsize=(6, 4))
    for mu, row in table.items():
        gs = [g for g, v in enumerate(row) if v > 0]
        ax.plot(gs, [math.log10(row[g]) for g in gs], marker="o", label=f"({format_partition(mu)})")
    ax.set_xlabel("genus g")
    ax.set_ylabel("log10 h")
    if title:
        ax.set_title(title)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination over the rationals; the matrix must be square and invertible."""
    n = len(matrix)
    a = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]


def fit_exponential(values: Sequence[Fraction], bases: Sequence[int], offset: int) -> list[Fraction]:
    """Coefficients ``c_b`` with ``values[g] = sum_b c_b b^(2g + offset)``, from the first ``len(bases)`` genera."""
    n = len(bases)
    matrix = [[Fraction(b) ** (2 * g + offset) for b in bases] for g in range(n)]
    return solve_exact(matrix, list(values[:n]))


def printed_coefficients(profile_id: str) -> list[Fraction]:
    """Recover the printed coefficients by fitting the printed formula against its own bases."""
    offset, bases = SMALL_DEGREE_BASES[profile_id]
    values = [hurwitz_small_degree(g, profile_id) for g in range(len(bases))]
    return fit_exponential(values, bases, offset)


@dataclass
class Resolution:
    profile_id: str
    degree: int
    labelled: Partition
    formula_values: list[Fraction]
    candidates: dict[Partition, list[Fraction]]
    diagnosis: list[tuple[int, Fraction, Fraction]]  # (base, printed, fitted to closest profile)

    @property
    def matches(self) -> list[Partition]:
        return [mu for mu, vals in self.candidates.items() if vals == self.formula_values]

    @property
    def closest(self) -> Partition:
        def distance(mu: Partition) -> float:
            vals = self.candidates[mu]
            return max(abs(math.log(f / v)) if v > 0 else math.inf for f, v in zip(self.formula_values, vals))

        return min(self.candidates, key=distance)

    def comparison_table(self) -> str:
        gmax = len(self.formula_values) - 1
        head = ["profile"] + [f"g={g}" for g in range(gmax + 1)] + ["match"]
        rows = [["formula"] + [format_rational(v) for v in self.formula_values] + [""]]
        for mu, vals in self.candidates.items():
            rows.append([f"({format_partition(mu)})"] + [format_rational(v) for v in vals]
                        + ["yes" if vals == self.formula_values else "no"])
        widths = [max(len(r[i]) for r in [head] + rows) for i in range(len(head))]
        fmt = lambda r: "  ".join(c.rjust(wd) for c, wd in zip(r, widths))  # noqa: E731
        return "\n".join([fmt(head)] + [fmt(r) for r in rows])


def resolve_small_degree(profile_id: str, gmax: int = 3, backend: str = "character") -> Resolution:
    """Compare a printed small-degree formula with every profile of its degree."""
    degree, labelled, _ = SMALL_DEGREE_FORMULAS[profile_id]
    formula_values = [hurwitz_small_degree(g, profile_id) for g in range(gmax + 1)]
    candidates = {
        mu: [compute(HurwitzInstance(g, mu), backend, connected=True) for g in range(gmax + 1)]
        for mu in partitions_of(degree)
    }
    res = Resolution(profile_id, degree, labelled, formula_values, candidates, [])
    if profile_id in SMALL_DEGREE_BASES:
        offset, bases = SMALL_DEGREE_BASES[profile_id]
        target = res.matches[0] if res.matches else res.closest
        values = [compute(HurwitzInstance(g, target), backend, connected=True) for g in range(len(bases))]
        fitted = fit_exponential(values, bases, offset)
        res.diagnosis = list(zip(bases, printed_coefficients(profile_id), fitted))
    return res


def plot_resolution(resolutions: Sequence[Resolution], path: Path) -> Path:
    fig, axes = plt.subplots(1, len(resolutions), figsize=(5 * len(resolutions), 4), squeeze=False)
    for ax, res in zip(axes[0], resolutions):
        for mu, vals in res.candidates.items():
            gs = [g for g, v in enumerate(vals) if v > 0]
            ratios = [math.log10(res.formula_values[g] / vals[g]) for g in gs]
            ax.plot(gs, ratios, marker="o", label=f"({format_partition(mu)})")
        ax.axhline(0.0, color="k", lw=0.8)
        ax.set_title(f"{res.profile_id} formula / h(g, mu)")
        ax.set_xlabel("genus g")
        ax.set_ylabel("log10 ratio")
        ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def resolution_markdown(resolutions: Sequence[Resolution]) -> str:
    lines = ["# Small-degree formula resolution", ""]
    for res in resolutions:
        lines.append(f"## {res.profile_id} (degree {res.degree}, printed label ({format_partition(res.labelled)}))")
        lines.append("")
        matched = ", ".join(f"({format_partition(m)})" for m in res.matches) or "none"
        lines.append(f"exact matches: {matched}")
        if not res.matches:
            lines.append(f"closest profile: ({format_partition(res.closest)})")
        lines.append("")
        lines.append("```")
        lines.append(res.comparison_table())
        lines.append("```")
        if res.diagnosis:
            lines.append("")
            lines.append("| base | printed coefficient | coefficient fitted to backend |")
            lines.append("|---:|---:|---:|")
            for base, printed, fitted in res.diagnosis:
                flag = "" if printed == fitted else " **differs**"
                lines.append(f"| {base} | {format_rational(printed)} | {format_rational(fitted)}{flag} |")
        lines.append("")
    return "\n".join(lines)


def write_resolution_report(out_dir: Path, gmax: int = 3) -> list[Resolution]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    resolutions = [resolve_small_degree(pid, gmax) for pid in ("deg5", "deg6")]
    (out_dir / "resolution.md").write_text(resolution_markdown(resolutions))
    with open(out_dir / "resolution.csv", "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["formula", "profile", "genus", "formula_value", "backend_value", "match"])
        for res in resolutions:
            for mu, vals in res.candidates.items():
                for g, (f, v) in enumerate(zip(res.formula_values, vals)):
                    writer.writerow([res.profile_id, format_partition(mu), g, format_rational(f),
                                     format_rational(v), int(f == v)])
    plot_resolution(resolutions, out_dir / "resolution.png")
    return resolutions
