"""Figure rendering for check reports: a verdict grid and a timing chart.

Written next to the delimited report output; rendering never changes a
verdict. matplotlib is imported lazily so the checking paths stay light.
"""

from __future__ import annotations

from pathlib import Path

from .report import CheckReport

PASS_COLOR = "#2e7d32"
FAIL_COLOR = "#c62828"


def render_report_figures(report: CheckReport, outdir: str | Path) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Rectangle

    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    results = report.results
    names = [f"{r.name} [{r.tag}]" for r in results]
    written: list[Path] = []

    height = max(1.5, 0.32 * len(results) + 1.0)
    fig, ax = plt.subplots(figsize=(8.0, height))
    for row, result in enumerate(results):
        color = PASS_COLOR if result.passed else FAIL_COLOR
        ax.add_patch(Rectangle((0, len(results) - 1 - row), 1, 0.9, color=color))
        label = "pass" if result.passed else "fail"
        if result.witness is not None and result.witness.grades:
            label += f" @ {result.witness.grades}"
        ax.text(1.08, len(results) - 1 - row + 0.45, label, va="center", fontsize=8)
    ax.set_xlim(0, 3)
    ax.set_ylim(-0.2, len(results))
    ax.set_yticks([len(results) - 1 - i + 0.45 for i in range(len(results))])
    ax.set_yticklabels(names, fontsize=8)
    ax.set_xticks([])
    title = f"{report.title}: " + ("all checks passed" if report.ok else "checks failed")
    if report.seed is not None:
        title += f" (seed {report.seed})"
    ax.set_title(title, fontsize=10)
    for spine in ax.spines.values():
        spine.set_visible(False)
    fig.tight_layout()
    verdict_path = out / "checks.png"
    fig.savefig(verdict_path, dpi=150)
    plt.close(fig)
    written.append(verdict_path)

    fig, ax = plt.subplots(figsize=(8.0, height))
    positions = range(len(results))
    ax.barh(
        [len(results) - 1 - i for i in positions],
        [r.millis for r in results],
        color=[PASS_COLOR if r.passed else FAIL_COLOR for r in results],
    )
    ax.set_yticks([len(results) - 1 - i for i in positions])
    ax.set_yticklabels(names, fontsize=8)
    ax.set_xlabel("milliseconds")
    ax.set_title(f"{report.title}: check timings", fontsize=10)
    fig.tight_layout()
    timing_path = out / "timings.png"
    fig.savefig(timing_path, dpi=150)
    plt.close(fig)
    written.append(timing_path)
    return written
