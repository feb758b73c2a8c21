"""Convergence report: delimited traces plus rendered figures.

For each requested kappa the report writes the exact iteration trace as
CSV (schema ``n,numerator,denominator,decimal``) and a matplotlib figure
of the terms closing in on the exact limit. Floats appear only at the
plotting boundary; the CSV carries the exact integers.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .iteration import IterationTrace, iterate_simple, limit_simple


def write_trace_csv(path: Path, trace: IterationTrace) -> None:
    """Write one trace in the n,numerator,denominator,decimal schema."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "numerator", "denominator", "decimal"])
        for n, (term, dec) in enumerate(zip(trace.terms, trace.decimals)):
            writer.writerow([n, str(term.numerator), str(term.denominator), dec])


def render_convergence_figure(path: Path, trace: IterationTrace, digits: int = 3) -> None:
    """Plot the trace terms against their fixed-point limit."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    limit = limit_simple(trace.kappa)
    xs = range(len(trace.terms))
    ys = [float(t) for t in trace.terms]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(xs, ys, marker="o", lw=1.2, label=f"t(n), kappa={trace.kappa}")
    ax.axhline(
        float(limit),
        color="crimson",
        ls="--",
        lw=1.0,
        label=f"limit {limit} ≈ {limit.decimal(digits)}",
    )
    ax.set_xlabel("n")
    ax.set_ylabel("t(n)")
    ax.set_title(f"t(n+1) = {trace.kappa} + 1/t(n)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def generate_report(
    outdir: Path,
    kappas: tuple[int, ...] = (1, 2),
    terms: int = 11,
    seed: str = "paper",
    digits: int = 3,
) -> list[Path]:
    """Write trace CSVs and convergence figures; returns the files created."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for kappa in kappas:
        trace = iterate_simple(kappa, terms, seed=seed, digits=digits)
        csv_path = outdir / f"kappa{kappa}_trace.csv"
        write_trace_csv(csv_path, trace)
        written.append(csv_path)
        fig_path = outdir / f"kappa{kappa}_convergence.png"
        render_convergence_figure(fig_path, trace, digits)
        written.append(fig_path)
    return written
