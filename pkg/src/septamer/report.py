"""Report files: tab-separated tables and matplotlib figures.

Figures are rendered with the Agg backend straight to PNG files; nothing
is ever shown on screen.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .reconstruction import ReconstructionReport  # noqa: E402

FIG_WIDTH = 6.0
GOLDEN = (5 ** 0.5 - 1) / 2


def _new_figure(width=FIG_WIDTH, height=None):
    if height is None:
        height = width * GOLDEN
    fig, ax = plt.subplots(figsize=(width, height))
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    return fig, ax


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_certificate_table(report: ReconstructionReport, path) -> None:
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh, delimiter="\t")
        out.writerow(["separator", "kind", "zeta", "zeta0", "Z_size", "dominator", "key_u", "key_v", "key_Q", "key_R", "key_S0", "key_A"])
        for r in report.records:
            key = r.key or (None,) * 6
            out.writerow([
                ",".join(map(str, sorted(r.S))),
                r.kind,
                r.zeta,
                "" if r.zeta0 is None else r.zeta0,
                "" if r.z_size is None else r.z_size,
                "" if r.dominator is None else r.dominator,
                *("" if part is None else (",".join(map(str, part)) if isinstance(part, tuple) else part) for part in key),
            ])


def plot_zeta_histogram(report: ReconstructionReport, path) -> None:
    """Stacked bars of zeta(S) per separator class."""
    kinds = ["certified", "dominated", "above-zeta-max"]
    values = sorted({r.zeta for r in report.records}) or [0]
    fig, ax = _new_figure()
    bottom = [0] * len(values)
    for kind in kinds:
        heights = [sum(1 for r in report.records if r.kind == kind and r.zeta == z) for z in values]
        if any(heights):
            ax.bar(values, heights, bottom=bottom, label=kind)
            bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_xlabel(r"$\zeta(S)$")
    ax.set_ylabel("minimal separators")
    ax.set_xticks(values)
    ax.legend(frameon=False)
    _save(fig, path)


def plot_zeta_drop(report: ReconstructionReport, path) -> None:
    """zeta(S) against zeta of the residual separator; every point must sit below the diagonal."""
    pts = [(r.zeta, r.zeta0) for r in report.records if r.zeta0 is not None]
    fig, ax = _new_figure(width=4.5, height=4.5)
    top = max([p for pair in pts for p in pair] + [1])
    ax.plot([0, top], [0, top], color="0.6", lw=1, ls="--")
    if pts:
        xs, ys = zip(*pts)
        ax.scatter(xs, ys, s=18, alpha=0.6)
    ax.set_xlim(-0.3, top + 0.3)
    ax.set_ylim(-0.3, top + 0.3)
    ax.set_xlabel(r"$\zeta_G(S)$")
    ax.set_ylabel(r"$\zeta_{G_0}(S_0)$")
    _save(fig, path)


def write_certify_report(report: ReconstructionReport, directory) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = [directory / "certificates.tsv", directory / "zeta_histogram.png", directory / "zeta_drop.png"]
    write_certificate_table(report, paths[0])
    plot_zeta_histogram(report, paths[1])
    plot_zeta_drop(report, paths[2])
    return paths


def write_growth_report(family: str, rows: list[tuple[int, int, int]], directory) -> list[Path]:
    """rows are (k, n, separator count); writes growth.tsv and a log-scale plot."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    table = directory / "growth.tsv"
    with open(table, "w", newline="") as fh:
        out = csv.writer(fh, delimiter="\t")
        out.writerow(["family", "k", "n", "separators"])
        for k, n, count in rows:
            out.writerow([family, k, n, count])
    fig, ax = _new_figure()
    ks = [r[0] for r in rows]
    ax.semilogy(ks, [max(r[2], 1) for r in rows], marker="o", label=family)
    ax.set_xlabel("k")
    ax.set_ylabel("minimal separators")
    ax.legend(frameon=False)
    figure = directory / "growth.png"
    _save(fig, figure)
    return [table, figure]
