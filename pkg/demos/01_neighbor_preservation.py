"""How much of each point's k-neighborhood survives a reduction?

Builds a random 60-point cloud in 32 dimensions, projects it down with
PCA at a few target dimensions, and prints the preservation accuracy:
the mean fraction of each point's 5 nearest neighbors that are still
its 5 nearest neighbors after the projection.
"""

import numpy as np

from opdr import (
    Method,
    Metric,
    ReducerConfig,
    VectorSet,
    accuracy,
    knn_table,
    op_level_example,
    reduce,
)

rng = np.random.default_rng(0)
x = VectorSet(rng.normal(size=(60, 32)))
k = 5

table_x = knn_table(x, k, Metric.L2)

print(f"m = {x.count}, d = {x.dim}, k = {k}\n")
print(" n   accuracy  OP_k?")
for n in (2, 4, 8, 16, 24, 32):
    y = reduce(x, ReducerConfig(Method.PCA, n)).y
    report = accuracy(table_x, knn_table(y, k, Metric.L2))
    print(f"{n:>2}   {report.accuracy:.4f}    {report.is_op_k}")

# The notion is about *sets*, not ordered lists: preserving the top-2
# set does not imply preserving the top-1 set.
lx, ly, op = op_level_example()
print(f"\nsorted neighbors before: {lx}, after: {ly}")
for z in (0, 1, 2):
    print(f"  OP_{z}: {op[z]}")
