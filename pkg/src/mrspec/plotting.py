"""Figure rendering for the CLI report paths.

Each figure-producing command writes a PNG next to its CSV.  Kept separate
so the solver modules never import matplotlib.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__all__ = ["save_centrifugal_figure", "save_region_figure"]


def save_centrifugal_figure(rows, b: float, path: str) -> None:
    """Plot 1/r^2 against its two exponential replacements.

    rows are (r, exact, improved, conventional) tuples as produced by
    approximation_error_table.
    """
    r = [row[0] for row in rows]
    exact = [row[1] for row in rows]
    improved = [row[2] for row in rows]
    conventional = [row[3] for row in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(r, exact, "-", color="black", label=r"$1/r^2$")
    ax.plot(r, improved, "--", color="tab:blue", label="improved (c0 = 1/12)")
    ax.plot(r, conventional, "-.", color="tab:red", label="conventional (c0 = 0)")
    ax.set_xlabel("r")
    ax.set_ylabel("centrifugal factor")
    ax.set_yscale("log")
    ax.set_title(f"centrifugal term and its replacements, b = {b:g}")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_region_figure(pairs, alpha: float, a_strength: float, path: str) -> None:
    """Scatter the feasible integer (n_r, l) pairs."""
    n_r = [p[0] for p in pairs]
    l = [p[1] for p in pairs]
    fig, ax = plt.subplots(figsize=(5.4, 4.6))
    ax.scatter(l, n_r, marker="s", s=60, color="tab:blue")
    ax.set_xlabel("l")
    ax.set_ylabel("n_r")
    ax.set_title(f"bound-state region, A = {a_strength:g}, alpha = {alpha:g}")
    ax.grid(True, linestyle=":", alpha=0.5)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
