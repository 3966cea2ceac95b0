"""Figure rendering for run reports.

Each report family gets one renderer; all of them write PNG files into a
directory and return the paths.  Rendering is optional and never affects
the report's result payload.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _finish(fig, path: str) -> str:
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def coloring_matrix(doc: dict, path: str, title: str) -> str:
    """Heatmap of a pair coloring as a symmetric vertex matrix."""
    n, values = doc["n"], doc["values"]
    grid = [[-1] * n for _ in range(n)]
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            grid[i][j] = grid[j][i] = values[k]
            k += 1
    fig, ax = plt.subplots(figsize=(4, 3.2))
    im = ax.imshow(grid, cmap="viridis", vmin=-1, vmax=doc["colors"] - 1)
    ax.set_title(title)
    ax.set_xlabel("vertex")
    ax.set_ylabel("vertex")
    fig.colorbar(im, ax=ax, label="color (diagonal = none)")
    fig.tight_layout()
    return _finish(fig, path)


def budget_ladder(params_doc: dict, omega: list[int], path: str) -> str:
    """Widths against their budget intervals, with uncovered levels marked."""
    thetas = params_doc["theta_list"]
    budgets = params_doc["budgets"]
    mu = params_doc["mu"]
    fig, ax = plt.subplots(figsize=(4.5, 3.2))
    for k, t in enumerate(thetas):
        lo = budgets[str(t)]
        above = [budgets[str(s)] for s in thetas if s > t]
        hi = min(above) if above else mu
        ax.plot([lo, hi], [k, k], lw=5, solid_capstyle="butt",
                label=f"width {t}")
        ax.plot([t], [k], marker="D", color="black", ms=5)
    for lvl in omega:
        ax.axvline(lvl, color="red", ls=":", lw=1)
    ax.set_yticks(range(len(thetas)),
                  [f"width {t}" for t in thetas])
    ax.set_xlabel("level (diamond = width, bar = budget interval)")
    ax.set_title("budget coverage of levels")
    fig.tight_layout()
    return _finish(fig, path)


def count_histogram(counts: dict[int, int], path: str, title: str) -> str:
    """Bar chart of condition counts by domain size."""
    sizes = sorted(counts)
    fig, ax = plt.subplots(figsize=(4, 3))
    ax.bar(sizes, [counts[s] for s in sizes], color="steelblue")
    ax.set_xlabel("domain size")
    ax.set_ylabel("conditions")
    ax.set_title(title)
    fig.tight_layout()
    return _finish(fig, path)


def clause_grid(statuses: dict[str, dict], path: str, title: str) -> str:
    """One row per clause, colored by status."""
    palette = {"verified": "#2a9d4e", "violated": "#d43d2a",
               "bounded-skip": "#e8a013"}
    names = sorted(statuses)
    fig, ax = plt.subplots(figsize=(4.5, 0.35 * len(names) + 1))
    for row, name in enumerate(names):
        status = statuses[name]["status"]
        ax.barh(row, 1, color=palette.get(status, "gray"))
        ax.text(0.02, row, f"{name}: {status}", va="center", fontsize=8)
    ax.set_ylim(-0.6, len(names) - 0.4)
    ax.set_xticks([])
    ax.set_yticks([])
    ax.invert_yaxis()
    ax.set_title(title)
    fig.tight_layout()
    return _finish(fig, path)


def render_for_report(report, outdir: str) -> list[str]:
    """Render the figures appropriate to a report; returns written paths."""
    os.makedirs(outdir, exist_ok=True)
    sub = report.subcommand
    base = os.path.join(outdir, sub.replace("-", "_"))
    out: list[str] = []
    if sub in ("relation", "square-bracket") and report.witness:
        out.append(coloring_matrix(report.witness, base + "_witness.png",
                                   f"{sub} counterexample"))
    elif sub in ("params", "demo-presets"):
        docs = (report.result["presets"] if sub == "demo-presets"
                else [report.result])
        for k, doc in enumerate(docs):
            out.append(budget_ladder(doc["params"], doc.get("omega", []),
                                     f"{base}_{k}_budgets.png"))
    elif sub == "poset-props" and "counts_by_domain_size" in report.result:
        counts = {int(k): v for k, v in
                  report.result["counts_by_domain_size"].items()}
        out.append(count_histogram(counts, base + "_counts.png",
                                   "conditions by domain size"))
    elif sub == "subposet-check":
        for k, item in enumerate(report.result["reports"]):
            out.append(clause_grid(item["clauses"], f"{base}_{k}_clauses.png",
                                   f"axiom statuses, instance {k}"))
    elif sub == "reduce" and report.result.get("example") is not None:
        out.append(coloring_matrix(report.result["example"]["doubled"],
                                   base + "_doubled.png",
                                   "doubled coloring (example instance)"))
    elif sub == "topo" and report.result.get("example") is not None:
        out.append(coloring_matrix(report.result["example"]["coloring"],
                                   base + "_system.png",
                                   "derived system coloring (example)"))
    return out
