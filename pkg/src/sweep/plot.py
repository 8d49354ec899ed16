"""
Log-log scatter of spanner size against n, one series per t.
"""

import os

import matplotlib

matplotlib.use('Agg')

import matplotlib.pyplot as plt

from analysis.report import SpannerReport


def plot_sizes(reports: list[SpannerReport], path: str) -> None:
    series: dict[int, list[tuple[int, int]]] = {}
    for r in reports:
        if r.m_spanner == 0:
            continue
        series.setdefault(r.t, []).append((r.n, r.m_spanner))

    fig, ax = plt.subplots(figsize=(8, 5))
    for t in sorted(series):
        points = sorted(series[t])
        ax.scatter([n for n, _ in points], [m for _, m in points], label=f"t={t}", s=18)
    ax.set_xscale('log')
    ax.set_yscale('log')
    ax.set_xlabel("n")
    ax.set_ylabel("spanner edges")
    ax.set_title("Spanner size by n")
    ax.legend()
    fig.tight_layout()
    os.makedirs(os.path.dirname(path) or '.', exist_ok=True)
    fig.savefig(path, format='svg')
    plt.close(fig)
