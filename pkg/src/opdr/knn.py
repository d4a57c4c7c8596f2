"""Exact k-nearest-neighbor sets with deterministic tie-breaking.

Neighbors are found by full sort of each point's distance row, which is
exact and, with a stable sort keyed on distance, breaks ties by ascending
point id.  The query point itself is always excluded.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import VectorSet
from .errors import KTooLarge
from .metrics import Metric, pairwise_distances


@dataclass(frozen=True)
class NeighborSet:
    """The unordered set of the k nearest neighbors of one query point."""

    query: int
    k: int
    members: frozenset[int]

    def __post_init__(self):
        if len(self.members) != self.k:
            raise ValueError(f"expected {self.k} members, got {len(self.members)}")
        if self.query in self.members:
            raise ValueError("query point cannot be its own neighbor")


@dataclass(frozen=True)
class KnnTable:
    """One NeighborSet per point of a vector set, in point-id order."""

    k: int
    metric: Metric
    sets: tuple[NeighborSet, ...]

    def __post_init__(self):
        for i, s in enumerate(self.sets):
            if s.query != i:
                raise ValueError(f"sets[{i}] has query {s.query}")

    @property
    def count(self) -> int:
        return len(self.sets)


def knn_table(vs: VectorSet, k: int, metric: Metric) -> KnnTable:
    """Exact KNN sets for every point of ``vs``; ties go to the lower id."""
    m = vs.count
    if not 1 <= k <= m - 1:
        raise KTooLarge(f"k={k} requires 1 <= k <= m-1 = {m - 1}")
    dists = pairwise_distances(metric, vs)
    sets = []
    for i in range(m):
        # stable sort on distance keeps equal-distance candidates in
        # ascending id order, which is the tie-break rule
        order = np.argsort(dists[i], kind="stable")
        order = order[order != i]
        sets.append(NeighborSet(query=i, k=k, members=frozenset(int(j) for j in order[:k])))
    return KnnTable(k=k, metric=metric, sets=tuple(sets))
