"""Figure rendering for the CLI report paths (written to files, never shown)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_stats_figure(rows: list[dict], path: str) -> None:
    """Histogram panels for a random-stats run: USS sizes and rigidity values."""
    sizes = [int(r["uss_size"]) for r in rows if r["status"] == "ok"]
    rigidities = [float(eval_fraction(r["rigidity"])) for r in rows if r["status"] == "ok"]
    fig, (ax_size, ax_rig) = plt.subplots(1, 2, figsize=(8, 3.2))
    if sizes:
        ax_size.hist(sizes, bins=range(1, max(sizes) + 2), color="steelblue", rwidth=0.9)
    ax_size.set_xlabel("ultra summit set size")
    ax_size.set_ylabel("samples")
    if rigidities:
        ax_rig.hist(rigidities, bins=20, range=(0.0, 1.0), color="darkorange", rwidth=0.9)
    ax_rig.set_xlabel("rigidity of USS representative")
    ax_rig.set_ylabel("samples")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_rigid_power_figure(report: dict, path: str) -> None:
    """Rigidity of the tested powers, with the found rigid power marked."""
    chain = report["chain"]
    ms = [row["m"] for row in chain]
    values = [float(eval_fraction(row["rigidity"])) for row in chain]
    fig, ax = plt.subplots(figsize=(6, 3.2))
    ax.plot(ms, values, marker="o", markersize=3, linewidth=1, color="steelblue")
    ax.axhline(1.0, linestyle=":", linewidth=1, color="gray")
    if report["result"] is not None:
        m = report["result"]["m"]
        ax.axvline(m, linestyle="--", linewidth=1, color="darkorange")
        ax.set_title(f"rigid power found at m = {m}")
    else:
        ax.set_title("no rigid power within the bound")
    ax.set_xlabel("power m")
    ax.set_ylabel("rigidity of X^m")
    ax.set_ylim(-0.05, 1.1)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def eval_fraction(text: str) -> float:
    num, _, den = str(text).partition("/")
    return int(num) / int(den) if den else float(num)
