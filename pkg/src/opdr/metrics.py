"""Pairwise distance functions: L1, L2, and cosine distance.

The pairwise matrix is materialized in full (the workloads here keep m in
the hundreds at most) and made bit-exactly symmetric by computing each
pair once and mirroring.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .core import VectorSet
from .errors import DimensionMismatch, ZeroNormVector


class Metric(str, Enum):
    L1 = "l1"
    L2 = "l2"
    COSINE = "cosine"


def _pair_distances(metric: Metric, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Distances between corresponding rows of u and v (both p x d)."""
    if metric is Metric.L1:
        return np.abs(u - v).sum(axis=1)
    if metric is Metric.L2:
        return np.sqrt(((u - v) ** 2).sum(axis=1))
    # cosine: 1 - u.v / (|u||v|), clamped against rounding
    nu = np.linalg.norm(u, axis=1)
    nv = np.linalg.norm(v, axis=1)
    if np.any(nu == 0) or np.any(nv == 0):
        raise ZeroNormVector("cosine distance is undefined for a zero-norm vector")
    d = 1.0 - (u * v).sum(axis=1) / (nu * nv)
    return np.clip(d, 0.0, 2.0)


def distance(metric: Metric, u, v) -> float:
    """Distance between two vectors under the given metric."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.ndim != 1 or v.ndim != 1 or u.shape != v.shape or u.size < 1:
        raise DimensionMismatch(f"incompatible shapes {u.shape} and {v.shape}")
    return float(_pair_distances(metric, u[None, :], v[None, :])[0])


def pairwise_distances(metric: Metric, vs: VectorSet) -> np.ndarray:
    """Symmetric m x m distance matrix with an exactly zero diagonal."""
    x = vs.data
    m = vs.count
    out = np.zeros((m, m), dtype=np.float64)
    if m == 1:
        return out
    iu, ju = np.triu_indices(m, k=1)
    vals = _pair_distances(metric, x[iu], x[ju])
    out[iu, ju] = vals
    out[ju, iu] = vals
    return out
