"""Order-preserving dimension reduction toolkit.

Quantifies how well a dimension-reduction map preserves each point's set
of k-nearest neighbors, fits the accuracy-vs-log(n/m) law to sweep data,
and recommends the minimal target dimension for a requested accuracy.
"""

from .core import VectorSet, load_vectors, save_vectors
from .errors import OpdrError
from .fit import FitResult, Recommendation, fit_law, predict_accuracy, recommend_dim
from .harness import SweepConfig, SweepRecord, run_sweep, summarize
from .knn import KnnTable, NeighborSet, knn_table
from .metrics import Metric, distance, pairwise_distances
from .opm import (
    AccuracyReport,
    MeasureContext,
    accuracy,
    check_measure_axioms,
    measure,
    op_level_example,
)
from .reduce import Method, ReducerConfig, ReductionResult, reduce

__version__ = "0.1.0"

__all__ = [
    "AccuracyReport",
    "FitResult",
    "KnnTable",
    "MeasureContext",
    "Method",
    "Metric",
    "NeighborSet",
    "OpdrError",
    "Recommendation",
    "ReducerConfig",
    "ReductionResult",
    "SweepConfig",
    "SweepRecord",
    "VectorSet",
    "accuracy",
    "check_measure_axioms",
    "distance",
    "fit_law",
    "knn_table",
    "load_vectors",
    "measure",
    "op_level_example",
    "pairwise_distances",
    "predict_accuracy",
    "recommend_dim",
    "reduce",
    "run_sweep",
    "save_vectors",
    "summarize",
]
