"""PCA vs classical MDS on the same cloud.

With L2 distances as input, classical (Torgerson) MDS reproduces PCA
exactly; with L1 or cosine distances the double-centered matrix can have
negative eigenvalues, the embedding is only approximate, and neighbor
preservation drops below PCA's.
"""

import warnings

import numpy as np

from opdr import (
    Method,
    Metric,
    ReducerConfig,
    VectorSet,
    accuracy,
    knn_table,
    pairwise_distances,
    reduce,
)
from opdr.reduce import DegenerateSpectrumWarning

rng = np.random.default_rng(1)
x = VectorSet(rng.normal(size=(50, 20)))
n, k = 10, 5

pca = reduce(x, ReducerConfig(Method.PCA, n))
mds_l2 = reduce(x, ReducerConfig(Method.MDS, n, Metric.L2))

gap = np.abs(
    pairwise_distances(Metric.L2, pca.y) - pairwise_distances(Metric.L2, mds_l2.y)
).max()
print(f"max pairwise-distance gap, PCA vs MDS(L2): {gap:.2e}")

table_x = knn_table(x, k, Metric.L2)
print("\nreducer        accuracy (k=5, L2 evaluation)")
for label, result in [("PCA", pca), ("MDS on L2", mds_l2)]:
    rep = accuracy(table_x, knn_table(result.y, k, Metric.L2))
    print(f"{label:<13}  {rep.accuracy:.4f}")

with warnings.catch_warnings():
    warnings.simplefilter("ignore", DegenerateSpectrumWarning)
    for metric in (Metric.L1, Metric.COSINE):
        mds = reduce(x, ReducerConfig(Method.MDS, n, metric))
        rep = accuracy(table_x, knn_table(mds.y, k, Metric.L2))
        negatives = sum(1 for e in mds.explained if e <= 0)
        print(f"MDS on {metric.value:<6}  {rep.accuracy:.4f}   "
              f"({negatives} non-positive retained eigenvalues)")
