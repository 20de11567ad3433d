"""Report figures: CV grid heatmap and per-method loss bars."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .evaluation import ExperimentReport


def plot_cv_grid(report: ExperimentReport, path: str | Path) -> None:
    """Heatmap of mean CV ranking loss over the (measure, k) grid."""
    if report.grid is None or not report.grid.cv_table:
        return
    keys = list(report.grid.cv_table)
    measures = list(dict.fromkeys(m for m, _ in keys))
    ks = sorted({k for _, k in keys})
    table = np.array([[report.grid.cv_table[(m, k)] for k in ks] for m in measures])

    fig, ax = plt.subplots(figsize=(1.2 * len(ks) + 2.5, 0.6 * len(measures) + 1.5))
    im = ax.imshow(table, cmap="viridis_r", aspect="auto")
    ax.set_xticks(range(len(ks)), [str(k) for k in ks])
    ax.set_yticks(range(len(measures)), measures)
    ax.set_xlabel("k")
    ax.set_ylabel("measure")
    ax.set_title(f"CV ranking loss: {report.name}")
    for i in range(len(measures)):
        for j in range(len(ks)):
            ax.text(j, i, f"{table[i, j]:.3f}", ha="center", va="center",
                    color="white" if table[i, j] > table.mean() else "black",
                    fontsize=8)
    fig.colorbar(im, ax=ax, label="mean d_RL")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_test_losses(report: ExperimentReport, path: str | Path) -> None:
    """Bar chart of test ranking loss per method."""
    methods = ["able2rank", "err"]
    losses = [report.able2rank_loss, report.err_loss]
    if report.svm_loss is not None:
        methods.append("svm")
        losses.append(report.svm_loss)
    fig, ax = plt.subplots(figsize=(4, 3))
    ax.bar(methods, losses, color=["#1f77b4", "#ff7f0e", "#2ca02c"][: len(methods)])
    ax.set_ylabel("test d_RL")
    ax.set_ylim(0, max(0.1, max(losses) * 1.2))
    ax.set_title(report.name)
    for x, y in zip(methods, losses):
        ax.text(x, y, f"{y:.3f}", ha="center", va="bottom", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_report_figures(report: ExperimentReport, out_dir: str | Path) -> list[Path]:
    """Render all report figures into `out_dir`; returns the paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    grid_path = out_dir / "cv_grid.png"
    if report.grid is not None and report.grid.cv_table:
        plot_cv_grid(report, grid_path)
        written.append(grid_path)
    loss_path = out_dir / "test_loss.png"
    plot_test_losses(report, loss_path)
    written.append(loss_path)
    return written
