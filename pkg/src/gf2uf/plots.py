"""Figure rendering for benchmark reports.

Renders the operation-count, iteration-count and check-weight summaries
of a bench run to PNG files next to the CSV output.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .sim import GroupStats

_STYLE = {"offline": ("tab:red", "o"), "online": ("tab:blue", "s")}


def _series(agg, sizes_meta, backend, attr):
    pts = sorted(
        (sizes_meta[size]["n_qubits"], getattr(stats, attr))
        for (code, size, b), stats in agg.items()
        if b == backend
    )
    return [p[0] for p in pts], [p[1] for p in pts]


def plot_operations(agg, sizes_meta, path: str | os.PathLike, title: str) -> None:
    """Mean and max row-XOR bit counts per backend against system size."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for backend in sorted({k[2] for k in agg}):
        color, marker = _STYLE.get(backend, ("gray", "x"))
        xs, ys = _series(agg, sizes_meta, backend, "max_bit_xors")
        ax.plot(xs, ys, color=color, marker=marker, ls="--", label=f"{backend} max")
        xs, ys = _series(agg, sizes_meta, backend, "mean_bit_xors")
        ax.plot(xs, ys, color=color, marker=marker, ls="-", label=f"{backend} mean")
    ax.set_xlabel("qubits n")
    ax.set_ylabel("XOR operations (bit count)")
    if any(v > 0 for _, v in _iter_vals(agg, "max_bit_xors")):
        ax.set_yscale("log")
    ax.set_title(title)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_iterations(agg, sizes_meta, path: str | os.PathLike, title: str) -> None:
    """Mean and max growth iterations per backend against system size."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for backend in sorted({k[2] for k in agg}):
        color, marker = _STYLE.get(backend, ("gray", "x"))
        xs, ys = _series(agg, sizes_meta, backend, "max_iterations")
        ax.plot(xs, ys, color=color, marker=marker, ls="--", label=f"{backend} max")
        xs, ys = _series(agg, sizes_meta, backend, "mean_iterations")
        ax.plot(xs, ys, color=color, marker=marker, ls="-", label=f"{backend} mean")
    ax.set_xlabel("qubits n")
    ax.set_ylabel("growth iterations")
    ax.set_title(title)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_check_weight(sizes_meta, path: str | os.PathLike, title: str) -> None:
    """Per-sector parity-check weight against system size."""
    pts = sorted((m["n_qubits"], m["hx_weight"]) for m in sizes_meta.values())
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot([p[0] for p in pts], [p[1] for p in pts], color="tab:green", marker="d")
    ax.set_xlabel("qubits n")
    ax.set_ylabel("total H_X weight")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _iter_vals(agg: dict, attr: str):
    for key, stats in agg.items():
        yield key, getattr(stats, attr)


def render_bench_figures(
    agg: dict[tuple[str, str, str], GroupStats],
    sizes_meta: dict[str, dict[str, int]],
    out_dir: str | os.PathLike,
    prefix: str,
    title: str,
) -> list[str]:
    """Render the three report figures; returns the written paths."""
    paths = []
    for name, fn in (
        ("operations", lambda p: plot_operations(agg, sizes_meta, p, title)),
        ("iterations", lambda p: plot_iterations(agg, sizes_meta, p, title)),
        ("check_weight", lambda p: plot_check_weight(sizes_meta, p, title)),
    ):
        path = os.path.join(out_dir, f"{prefix}_{name}.png")
        fn(path)
        paths.append(path)
    return paths
