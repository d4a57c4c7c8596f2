"""Sweep driver: subsample, reduce, and score over a grid of (m, n).

Each cell draws its subsample from a counter-based Philox generator
seeded by (seed, m, repeat_index), so the full record stream is a pure
function of the input data and the configuration, independent of thread
count or execution order.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .core import VectorSet
from .errors import DatasetTooSmall, EmptyInput
from .knn import knn_table
from .metrics import Metric
from .opm import accuracy
from .reduce import Method, ReducerConfig, reduce

GENERATOR_ID = "numpy-philox4x64-10"

DEFAULT_SAMPLE_SIZES = (10, 20, 30, 40, 50, 60, 70, 80)


@dataclass(frozen=True)
class SweepConfig:
    sample_sizes: tuple[int, ...] = DEFAULT_SAMPLE_SIZES
    dims: tuple[int, ...] | None = None  # None = all n in 1..m-1 (method-valid)
    k: int = 5
    metric: Metric = Metric.L2
    method: Method = Method.PCA
    seed: int = 0
    repeats: int = 1

    def __post_init__(self):
        if not self.sample_sizes or list(self.sample_sizes) != sorted(set(self.sample_sizes)):
            raise ValueError("sample_sizes must be a non-empty ascending sequence")
        if self.k >= min(self.sample_sizes):
            raise ValueError(f"k={self.k} must be < min(sample_sizes)")
        if self.repeats < 1:
            raise ValueError("repeats must be positive")


@dataclass(frozen=True)
class SweepRecord:
    m: int
    n: int
    ratio: float
    k: int
    metric: Metric
    method: Method
    repeat_index: int
    accuracy: float


def _dim_grid(cfg: SweepConfig, m: int, d: int) -> list[int]:
    if cfg.dims is not None:
        return [n for n in cfg.dims if n < m]
    upper = m - 1
    if cfg.method is Method.PCA:
        upper = min(upper, d)  # PCA cannot exceed the ambient dimension
    return list(range(1, upper + 1))


def _subsample(x: VectorSet, m: int, seed: int, repeat: int) -> VectorSet:
    gen = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, m, repeat])))
    idx = gen.choice(x.count, size=m, replace=False)
    return VectorSet(x.data[np.sort(idx)])


def _run_block(x: VectorSet, cfg: SweepConfig, m: int, repeat: int) -> list[SweepRecord]:
    sub = _subsample(x, m, cfg.seed, repeat)
    table_x = knn_table(sub, cfg.k, cfg.metric)
    records = []
    for n in _dim_grid(cfg, m, x.dim):
        reduced = reduce(sub, ReducerConfig(cfg.method, n, cfg.metric))
        table_y = knn_table(reduced.y, cfg.k, cfg.metric)
        report = accuracy(table_x, table_y)
        records.append(
            SweepRecord(
                m=m,
                n=n,
                ratio=n / m,
                k=cfg.k,
                metric=cfg.metric,
                method=cfg.method,
                repeat_index=repeat,
                accuracy=report.accuracy,
            )
        )
    return records


def run_sweep(x: VectorSet, cfg: SweepConfig, threads: int | None = None) -> list[SweepRecord]:
    """All (m, n, repeat) cells, ordered by (m, n, repeat_index)."""
    if x.count < max(cfg.sample_sizes):
        raise DatasetTooSmall(
            f"dataset has {x.count} points, largest subsample is {max(cfg.sample_sizes)}"
        )
    blocks = [(m, r) for m in cfg.sample_sizes for r in range(cfg.repeats)]
    if threads is None:
        threads = os.cpu_count() or 1
    if threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda b: _run_block(x, cfg, *b), blocks))
    else:
        results = [_run_block(x, cfg, m, r) for m, r in blocks]
    records = [rec for block in results for rec in block]
    records.sort(key=lambda r: (r.m, r.n, r.repeat_index))
    return records


def summarize(records: list[SweepRecord]) -> list[tuple[float, float]]:
    """Mean accuracy per exact ratio, in ascending ratio order."""
    if not records:
        raise EmptyInput("no records to summarize")
    groups: dict[float, list[float]] = {}
    for rec in records:
        groups.setdefault(rec.ratio, []).append(rec.accuracy)
    return [(ratio, float(np.mean(groups[ratio]))) for ratio in sorted(groups)]


def write_records_csv(records, f, seed, dataset="-", version="opdr-0.1.0") -> None:
    """Write the sweep CSV: a provenance comment line, a header, then rows."""
    f.write(
        f"# seed={seed} generator={GENERATOR_ID} dataset={dataset} version={version}\n"
    )
    f.write("m,n,ratio,k,metric,method,repeat,accuracy\n")
    for r in records:
        f.write(
            f"{r.m},{r.n},{r.ratio:.17g},{r.k},{r.metric.value},"
            f"{r.method.value},{r.repeat_index},{r.accuracy:.17g}\n"
        )


def read_records_csv(f) -> list[tuple[int, int, float]]:
    """Read (n, m, accuracy) fit samples back from a sweep CSV."""
    samples = []
    header_seen = False
    for line in f:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            header_seen = True  # column header
            continue
        fields = line.split(",")
        samples.append((int(fields[1]), int(fields[0]), float(fields[7])))
    if not samples:
        raise EmptyInput("no sweep records in file")
    return samples
