"""Figures for benchmark reports (matplotlib, non-interactive backend)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import BenchReport, _pct  # noqa: E402
from .costmodel import theoretical_nu  # noqa: E402


def plot_speedups(report: BenchReport, path) -> None:
    """Measured ν₁ and ν₃ against N, with the analytic worst case dashed."""
    ns = report.n_values
    fig, ax = plt.subplots(figsize=(6, 4))
    for pct in report.hit_values:
        tag = f" ({_pct(pct)}% hits)" if pct is not None else ""
        ax.plot(ns, [report.nu[n, pct]["nu1"] for n in ns], "o-", label="ν₁ vs Cyrus-Beck" + tag)
        ax.plot(ns, [report.nu[n, pct]["nu3"] for n in ns], "s-", label="ν₃ vs Rappaport" + tag)
    theory = [theoretical_nu(n) for n in ns]
    ax.plot(ns, [t[0] for t in theory], "k--", lw=1, label="ν₁ analytic")
    ax.plot(ns, [t[2] for t in theory], "k:", lw=1, label="ν₃ analytic")
    ax.set_xlabel("N (window vertices)")
    ax.set_ylabel("speed-up over baseline")
    ax.set_title(f"Measured speed-up ({report.meta.get('nu_basis', '')})")
    ax.grid(alpha=0.3)
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
