"""Dimension-reduction maps: PCA and classical (Torgerson) MDS.

Both are deterministic: a fixed sign convention (the largest-magnitude
entry of each component made positive) removes the eigenvector sign
ambiguity, and only full dense decompositions are used.

Classical MDS is computed from the distance matrix of a selectable
metric.  With L2 distances it coincides with PCA; with L1 or cosine
distances the double-centered matrix need not be positive semidefinite
and negative eigenvalues are truncated to zero coordinates.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import VectorSet
from .errors import TargetDimTooLarge
from .metrics import Metric, pairwise_distances


class Method(str, Enum):
    PCA = "pca"
    MDS = "mds"


class DegenerateSpectrumWarning(UserWarning):
    """Requested more MDS dimensions than there are positive eigenvalues."""


@dataclass(frozen=True)
class ReducerConfig:
    method: Method
    target_dim: int
    metric: Metric = Metric.L2  # consumed by MDS only

    def __post_init__(self):
        if self.target_dim < 1:
            raise ValueError(f"target_dim must be positive, got {self.target_dim}")


@dataclass(frozen=True)
class ReductionResult:
    y: VectorSet
    method: Method
    explained: tuple[float, ...]  # retained spectrum, non-increasing


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip each column so its largest-magnitude entry is positive."""
    flips = np.sign(vectors[np.argmax(np.abs(vectors), axis=0), np.arange(vectors.shape[1])])
    flips[flips == 0] = 1.0
    return vectors * flips


def _pca(x: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    m, d = x.shape
    if n > min(d, m):
        raise TargetDimTooLarge(f"PCA target_dim {n} exceeds min(d, m) = {min(d, m)}")
    centered = x - x.mean(axis=0)
    _, s, vt = np.linalg.svd(centered, full_matrices=False)
    components = _fix_signs(vt[:n].T)  # d x n, orthonormal columns
    y = centered @ components
    eigenvalues = (s[:n] ** 2) / max(m - 1, 1)
    return y, eigenvalues


def _mds(x: np.ndarray, n: int, metric: Metric) -> tuple[np.ndarray, np.ndarray]:
    m = x.shape[0]
    if n > m - 1:
        raise TargetDimTooLarge(f"MDS target_dim {n} exceeds m-1 = {m - 1}")
    d2 = pairwise_distances(metric, VectorSet(x)) ** 2
    j = np.eye(m) - np.full((m, m), 1.0 / m)
    b = -0.5 * j @ d2 @ j
    b = (b + b.T) / 2  # guard symmetry against rounding
    evals, evecs = np.linalg.eigh(b)
    order = np.argsort(evals, kind="stable")[::-1]
    evals = evals[order][:n]
    evecs = _fix_signs(evecs[:, order][:, :n])
    positive = evals > 0
    if not positive.all():
        warnings.warn(
            f"only {int(positive.sum())} positive eigenvalues for target_dim {n}; "
            "padding with zero coordinates",
            DegenerateSpectrumWarning,
        )
    y = evecs * np.sqrt(np.where(positive, evals, 0.0))
    return y, evals


def reduce(x: VectorSet, cfg: ReducerConfig) -> ReductionResult:
    """Embed ``x`` into ``cfg.target_dim`` dimensions."""
    if cfg.method is Method.PCA:
        y, spectrum = _pca(x.data, cfg.target_dim)
    else:
        y, spectrum = _mds(x.data, cfg.target_dim, cfg.metric)
    return ReductionResult(
        y=VectorSet(y, ids=x.ids),
        method=cfg.method,
        explained=tuple(float(v) for v in spectrum),
    )
