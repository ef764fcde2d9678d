"""Figure rendering for the report commands. Files only: the Agg backend is
forced so the CLI never needs a display."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_grid_figure(path, xs, approx, exact, errors, stp=None, stp_errors=None, title=""):
    """Two panels: function vs interpolant(s) on top, absolute error below."""
    fig, (ax_val, ax_err) = plt.subplots(2, 1, figsize=(7.0, 6.0), sharex=True)
    ax_val.plot(xs, exact, "-", color="black", label="f(x)")
    ax_val.plot(xs, approx, "--", label="multi-point")
    if stp is not None:
        ax_val.plot(xs, stp, ":", label="single-point")
    ax_val.set_ylabel("value")
    ax_val.grid(True, alpha=0.3)
    ax_val.legend()
    ax_err.plot(xs, errors, "--", label="multi-point")
    if stp_errors is not None:
        ax_err.plot(xs, stp_errors, ":", label="single-point")
    ax_err.set_yscale("log")
    ax_err.set_xlabel("x")
    ax_err.set_ylabel("abs error")
    ax_err.grid(True, alpha=0.3)
    ax_err.legend()
    if title:
        ax_val.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_residual_figure(path, labels, residuals, tolerance=None, title=""):
    """Bar chart of per-condition absolute residuals."""
    fig, ax = plt.subplots(figsize=(max(4.0, 0.5 * len(labels)), 4.0))
    ax.bar(range(len(residuals)), residuals, color="steelblue")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
    if tolerance is not None and tolerance > 0:
        ax.axhline(tolerance, color="firebrick", linestyle="--", label="tolerance")
        ax.legend()
    ax.set_ylabel("abs residual")
    ax.grid(True, axis="y", alpha=0.3)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_comparison_figure(path, indices, deviations, gate=None, title=""):
    """Per-coefficient deviation between the three construction routes."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.bar(indices, deviations, color="steelblue")
    if gate is not None and gate > 0:
        ax.axhline(gate, color="firebrick", linestyle="--", label="gate")
        ax.legend()
    ax.set_xlabel("coefficient index")
    ax.set_ylabel("relative deviation")
    ax.grid(True, axis="y", alpha=0.3)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
