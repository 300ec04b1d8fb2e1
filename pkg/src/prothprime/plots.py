"""Figure rendering for the experiment reports.

matplotlib is imported lazily with the Agg backend so headless runs and
figure-free CLI paths never touch a display.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:
    from .experiments import ExpectationCheck, MStats, OpcountReport

__all__ = ["render_expectation", "render_m_distribution", "render_opcount"]


def _pyplot():
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt


def render_expectation(checks: Iterable["ExpectationCheck"], path: str) -> None:
    """Scatter the exact mean of v2(order) against p, with its e-1 floor."""
    plt = _pyplot()
    pts = [(c.p, float(c.mean_brute), c.e) for c in checks if c.mean_brute is not None]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.scatter([p for p, _, _ in pts], [m for _, m, _ in pts], s=8, label="exact mean of v2(order)")
    ax.scatter([p for p, _, _ in pts], [e - 1 for _, _, e in pts], s=8, marker="_", label="e - 1 floor")
    ax.set_xlabel("p")
    ax.set_ylabel("mean v2(order) over qualifying bases")
    ax.set_title("Mean 2-adic valuation of orders mod p")
    ax.legend(loc="upper left", fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_m_distribution(stats: "MStats", path: str) -> None:
    """Bar chart of observed m with the sample and exact means marked."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ms = [m for m, _ in stats.histogram]
    freqs = [hits / stats.trials for _, hits in stats.histogram]
    ax.bar(ms, freqs, width=0.8, label=f"{stats.trials} trials")
    ax.axvline(float(stats.sample_mean), color="C1", label=f"sample mean {float(stats.sample_mean):.4f}")
    if stats.exact_mean is not None:
        ax.axvline(
            float(stats.exact_mean),
            color="C2",
            linestyle="--",
            label=f"exact mean {float(stats.exact_mean):.4f}",
        )
    ax.set_xlabel("sqrt_mod calls m")
    ax.set_ylabel("frequency")
    ax.set_title(f"Randomized prover workload for N = {stats.form}")
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_opcount(reports: Iterable["OpcountReport"], path: str) -> None:
    """Multiplication totals per proof phase, one bar group per number."""
    plt = _pyplot()
    reports = list(reports)
    fig, ax = plt.subplots(figsize=(7.5, 4.5))
    xs = range(len(reports))
    step1 = [r.deterministic.step1 for r in reports]
    step2 = [r.deterministic.step2 for r in reports]
    ax.bar([x - 0.2 for x in xs], step1, width=0.4, label="root of -1")
    ax.bar([x + 0.2 for x in xs], step2, width=0.4, label="chain of square roots")
    ax.set_xticks(list(xs))
    ax.set_xticklabels([str(r.form) for r in reports], rotation=20, ha="right", fontsize="small")
    ax.set_ylabel("modular multiplications")
    ax.set_title("Deterministic proof cost by phase")
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
