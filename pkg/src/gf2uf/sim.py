"""Seeded Monte Carlo shots and metric aggregation.

One shot samples an i.i.d. error on the X sector's qubits, computes its
syndrome, decodes it with each configured backend and records the
operation counts.  Per-shot RNG streams are derived from (seed, shot)
so results are independent of execution order.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass

import numpy as np

from .bitmatrix import BitMatrix
from .codes import CssCode, TannerGraph, make_code, tanner_graph
from .decoder import BACKENDS, decode

CSV_COLUMNS = [
    "code",
    "size",
    "n_qubits",
    "p",
    "seed",
    "shot",
    "backend",
    "bit_xors",
    "row_xors",
    "iterations",
    "syndrome_weight",
    "valid",
]


@dataclass(frozen=True)
class SimConfig:
    """One benchmark point: a code at one size, one noise level."""

    code: str
    size: int | tuple[int, ...]
    p: float
    shots: int
    seed: int
    backends: tuple[str, ...] = BACKENDS

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if self.shots < 1:
            raise ValueError(f"shots must be >= 1, got {self.shots}")
        for b in self.backends:
            if b not in BACKENDS:
                raise ValueError(f"unknown backend {b!r}")


@dataclass
class ShotRecord:
    """Metrics of one decode of one shot."""

    shot: int
    backend: str
    bit_xors: int
    row_xors: int
    iterations: int
    valid: bool
    syndrome_weight: int


@dataclass
class GroupStats:
    """Mean/max summaries over one (code, size, backend) group."""

    shots: int
    mean_bit_xors: float
    max_bit_xors: int
    mean_row_xors: float
    max_row_xors: int
    mean_iterations: float
    max_iterations: int

    def as_dict(self) -> dict[str, float | int]:
        return {
            "shots": self.shots,
            "mean_bit_xors": self.mean_bit_xors,
            "max_bit_xors": self.max_bit_xors,
            "mean_row_xors": self.mean_row_xors,
            "max_row_xors": self.max_row_xors,
            "mean_iterations": self.mean_iterations,
            "max_iterations": self.max_iterations,
        }


def shot_rng(seed: int, shot_index: int) -> np.random.Generator:
    """Deterministic per-shot stream derived from (seed, shot_index)."""
    return np.random.default_rng(
        np.random.SeedSequence(entropy=seed, spawn_key=(shot_index,))
    )


def sample_error(n: int, p: float, rng: np.random.Generator) -> int:
    """Draw n independent bits, each 1 with probability p, packed."""
    if n == 0:
        return 0
    bits = rng.random(n) < p
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def syndrome(h: BitMatrix, e: int) -> int:
    """Exact GF(2) product H*e; raises on bits beyond the matrix width."""
    return h.mul_vec(e)


def run_shot(
    config: SimConfig,
    shot_index: int,
    code: CssCode | None = None,
    tanner: TannerGraph | None = None,
) -> list[ShotRecord]:
    """Run one shot: one error, decoded once per configured backend.

    The prebuilt code/tanner arguments only skip reconstruction; results
    are a pure function of (config, shot_index).
    """
    if code is None:
        code = make_code(config.code, config.size)
    if tanner is None:
        tanner = tanner_graph(code.hx)
    rng = shot_rng(config.seed, shot_index)
    e = sample_error(code.n_qubits, config.p, rng)
    sigma = syndrome(code.hx, e)
    weight = sigma.bit_count()
    records = []
    for backend in config.backends:
        result = decode(code.hx, tanner, sigma, backend)
        if not result.valid:
            raise RuntimeError(
                f"invalid shot: correction fails H*x = sigma "
                f"(code={config.code}, size={config.size}, seed={config.seed}, "
                f"shot={shot_index}, backend={backend})"
            )
        records.append(
            ShotRecord(
                shot=shot_index,
                backend=backend,
                bit_xors=result.counters.bit_xors,
                row_xors=result.counters.row_xors,
                iterations=result.iterations,
                valid=result.valid,
                syndrome_weight=weight,
            )
        )
    return records


def run_config(config: SimConfig, code: CssCode | None = None) -> list[ShotRecord]:
    """Run all shots of one configuration."""
    if code is None:
        code = make_code(config.code, config.size)
    tanner = tanner_graph(code.hx)
    records = []
    for shot in range(config.shots):
        records.extend(run_shot(config, shot, code, tanner))
    return records


def aggregate(
    records: list[ShotRecord], code: str = "", size: str = ""
) -> dict[tuple[str, str, str], GroupStats]:
    """Summarize records per backend under a (code, size) label.

    Means are exact sums over counts; zero-syndrome shots are included.
    Empty input gives an empty aggregate.  Merge dicts from several
    configurations to aggregate a grid.
    """
    by_backend: dict[str, list[ShotRecord]] = {}
    for rec in records:
        by_backend.setdefault(rec.backend, []).append(rec)
    out = {}
    for backend in sorted(by_backend):
        group = by_backend[backend]
        n = len(group)
        out[(code, size, backend)] = GroupStats(
            shots=n,
            mean_bit_xors=sum(r.bit_xors for r in group) / n,
            max_bit_xors=max(r.bit_xors for r in group),
            mean_row_xors=sum(r.row_xors for r in group) / n,
            max_row_xors=max(r.row_xors for r in group),
            mean_iterations=sum(r.iterations for r in group) / n,
            max_iterations=max(r.iterations for r in group),
        )
    return out


def csv_rows(
    config: SimConfig, code: CssCode, records: list[ShotRecord]
) -> list[dict[str, object]]:
    """Flatten records into CSV-schema dicts with the config context."""
    return [
        {
            "code": code.name,
            "size": code.size_label,
            "n_qubits": code.n_qubits,
            "p": config.p,
            "seed": config.seed,
            "shot": rec.shot,
            "backend": rec.backend,
            "bit_xors": rec.bit_xors,
            "row_xors": rec.row_xors,
            "iterations": rec.iterations,
            "syndrome_weight": rec.syndrome_weight,
            "valid": int(rec.valid),
        }
        for rec in records
    ]


def write_shot_csv(path: str | os.PathLike, rows: list[dict[str, object]]) -> None:
    """Write shot rows in canonical order (code, size, backend, shot)."""
    ordered = sorted(
        rows, key=lambda r: (r["code"], r["n_qubits"], r["size"], r["backend"], r["shot"])
    )
    with open(path, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(ordered)


def write_aggregate_json(
    path: str | os.PathLike, agg: dict[tuple[str, str, str], GroupStats]
) -> None:
    """Write the aggregate keyed by "code:size:backend"."""
    payload = {
        f"{code}:{size}:{backend}": stats.as_dict()
        for (code, size, backend), stats in sorted(agg.items())
    }
    with open(path, "w") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")
