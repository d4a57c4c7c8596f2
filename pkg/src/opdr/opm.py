"""Order-preserving measure and the aggregate KNN-preservation accuracy.

For a fixed query point i with neighbor sets E_x (original space) and
E_y (reduced space), the measure of an index subset F is
``|F ∩ E_y ∩ E_x| / k``.  Averaging the full-space measure over all
points gives the accuracy of the reduction; accuracy 1 means every
point's k-neighbor set survived the reduction intact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import OverlappingSubsets, TableMismatch
from .knn import KnnTable
from .metrics import Metric


@dataclass(frozen=True)
class MeasureContext:
    """The pair of neighbor sets (original and reduced) of one point."""

    k: int
    table_x: KnnTable
    table_y: KnnTable
    point: int

    def __post_init__(self):
        if self.table_x.count != self.table_y.count:
            raise TableMismatch(
                f"tables have {self.table_x.count} and {self.table_y.count} points"
            )
        if self.table_x.k != self.k or self.table_y.k != self.k:
            raise TableMismatch("tables do not share k with the context")
        if not 0 <= self.point < self.table_x.count:
            raise ValueError(f"point {self.point} out of range")

    @property
    def preserved(self) -> frozenset[int]:
        """E_x ∩ E_y for the context's point."""
        return (
            self.table_x.sets[self.point].members
            & self.table_y.sets[self.point].members
        )


@dataclass(frozen=True)
class AccuracyReport:
    k: int
    metric: Metric
    per_point: tuple[float, ...]
    accuracy: float
    is_op_k: bool


def measure(ctx: MeasureContext, f: Iterable[int]) -> float:
    """Measure of the index subset ``f`` for the context's point."""
    return len(frozenset(f) & ctx.preserved) / ctx.k


def check_measure_axioms(
    ctx: MeasureContext, partition: Sequence[Iterable[int]]
) -> bool:
    """True iff the measure is exactly additive over the disjoint partition.

    Counts are compared as integers before the single division by k, so
    the check is exact rather than tolerance-based.
    """
    parts = [frozenset(p) for p in partition]
    union: set[int] = set()
    total = 0
    for p in parts:
        if union & p:
            raise OverlappingSubsets(f"subsets overlap on {sorted(union & p)}")
        union |= p
        total += len(p & ctx.preserved)
    return len(union & ctx.preserved) == total


def accuracy(table_x: KnnTable, table_y: KnnTable) -> AccuracyReport:
    """Mean fraction of k-neighbors preserved from X to Y, over all points."""
    if table_x.count != table_y.count:
        raise TableMismatch(
            f"tables have {table_x.count} and {table_y.count} points"
        )
    if table_x.k != table_y.k:
        raise TableMismatch(f"tables have k={table_x.k} and k={table_y.k}")
    k = table_x.k
    counts = np.array(
        [len(sx.members & sy.members) for sx, sy in zip(table_x.sets, table_y.sets)],
        dtype=np.int64,
    )
    per_point = counts / k
    acc = float(per_point.mean())
    return AccuracyReport(
        k=k,
        metric=table_y.metric,
        per_point=tuple(float(p) for p in per_point),
        accuracy=acc,
        is_op_k=(acc == 1.0),
    )


def op_level_example():
    """The canonical three-point witness that OP_{k+1} does not imply OP_k.

    With sorted neighbor lists ("a", "b", "c") in the original space and
    ("b", "a", "c") after reduction, the top-2 sets agree while the top-1
    sets differ; the top-0 sets are trivially equal.
    """
    lx = ("a", "b", "c")
    ly = ("b", "a", "c")
    op = {z: set(lx[:z]) == set(ly[:z]) for z in range(len(lx) + 1)}
    return lx, ly, op
