"""Order-preserving measure: axioms, accuracy, and the OP_k witness."""

import numpy as np
import pytest

from opdr import (
    MeasureContext,
    Metric,
    VectorSet,
    accuracy,
    check_measure_axioms,
    knn_table,
    measure,
    op_level_example,
)
from opdr.errors import OverlappingSubsets, TableMismatch
from opdr.knn import KnnTable, NeighborSet


def make_table(neighbor_sets, k, metric=Metric.L2):
    sets = tuple(
        NeighborSet(query=i, k=k, members=frozenset(s))
        for i, s in enumerate(neighbor_sets)
    )
    return KnnTable(k=k, metric=metric, sets=sets)


def random_table(rng, m, k):
    sets = []
    for i in range(m):
        others = [j for j in range(m) if j != i]
        sets.append(rng.choice(others, size=k, replace=False))
    return make_table(sets, k)


class TestMeasure:
    def _ctx(self):
        # m=4, k=2: X-neighbors of p0 = {1,2}, Y-neighbors of p0 = {2,3}
        tx = make_table([{1, 2}, {0, 2}, {0, 1}, {0, 1}], k=2)
        ty = make_table([{2, 3}, {0, 2}, {0, 1}, {0, 1}], k=2)
        return MeasureContext(k=2, table_x=tx, table_y=ty, point=0)

    def test_empty_set_is_zero(self):
        assert measure(self._ctx(), frozenset()) == 0.0

    def test_full_set_under_identity(self):
        t = make_table([{1, 2}, {0, 2}, {0, 1}], k=2)
        ctx = MeasureContext(k=2, table_x=t, table_y=t, point=0)
        assert measure(ctx, frozenset({0, 1, 2})) == 1.0

    def test_hand_constructed_half(self):
        # triple intersection {2,3} ∩ {2,3} ∩ {1,2} = {2}, so 1/2
        assert measure(self._ctx(), frozenset({2, 3})) == 0.5

    def test_range(self):
        ctx = self._ctx()
        for f in [set(), {0}, {1, 2}, {0, 1, 2, 3}]:
            assert 0.0 <= measure(ctx, f) <= 1.0


class TestMeasureAxioms:
    def test_empty_partition_part(self):
        t = make_table([{1, 2}, {0, 2}, {0, 1}], k=2)
        ctx = MeasureContext(k=2, table_x=t, table_y=t, point=0)
        assert check_measure_axioms(ctx, [frozenset()])

    def test_overlapping_rejected(self):
        t = make_table([{1, 2}, {0, 2}, {0, 1}], k=2)
        ctx = MeasureContext(k=2, table_x=t, table_y=t, point=0)
        with pytest.raises(OverlappingSubsets):
            check_measure_axioms(ctx, [{1, 2}, {2, 3}])

    def test_additivity_over_random_partitions(self):
        rng = np.random.default_rng(10)
        for _ in range(200):
            m = int(rng.integers(3, 20))
            k = int(rng.integers(1, m))
            ctx = MeasureContext(
                k=k,
                table_x=random_table(rng, m, k),
                table_y=random_table(rng, m, k),
                point=int(rng.integers(m)),
            )
            split = rng.integers(2, size=m).astype(bool)
            part = [frozenset(np.flatnonzero(split)), frozenset(np.flatnonzero(~split))]
            assert check_measure_axioms(ctx, part)
            # measures themselves add up exactly as floats too
            total = measure(ctx, part[0] | part[1])
            assert total * k == measure(ctx, part[0]) * k + measure(ctx, part[1]) * k


class TestAccuracy:
    def test_identity_is_one(self):
        rng = np.random.default_rng(11)
        t = random_table(rng, 8, 3)
        report = accuracy(t, t)
        assert report.accuracy == 1.0
        assert report.is_op_k

    def test_disjoint_sets_zero(self):
        tx = make_table([{1}, {2}, {3}, {0}], k=1)
        ty = make_table([{2}, {3}, {0}, {1}], k=1)
        report = accuracy(tx, ty)
        assert report.accuracy == 0.0
        assert not report.is_op_k

    def test_three_points_k2_always_one(self):
        # k = m-1 forces both neighbor sets to be "everyone else"
        rng = np.random.default_rng(12)
        x = VectorSet(rng.normal(size=(3, 5)))
        y = VectorSet(rng.normal(size=(3, 2)))
        report = accuracy(knn_table(x, 2, Metric.L2), knn_table(y, 2, Metric.L2))
        assert report.accuracy == 1.0

    def test_per_point_matches_mean(self):
        rng = np.random.default_rng(13)
        report = accuracy(random_table(rng, 10, 4), random_table(rng, 10, 4))
        assert report.accuracy == np.mean(report.per_point)
        assert all(0.0 <= p <= 1.0 for p in report.per_point)

    def test_table_mismatch(self):
        rng = np.random.default_rng(14)
        with pytest.raises(TableMismatch):
            accuracy(random_table(rng, 5, 2), random_table(rng, 6, 2))
        with pytest.raises(TableMismatch):
            accuracy(random_table(rng, 5, 2), random_table(rng, 5, 3))


class TestOpLevels:
    def test_op_level_example(self):
        lx, ly, op = op_level_example()
        assert set(lx[:2]) == set(ly[:2])  # {b,a} == {a,b}
        assert set(lx[:1]) != set(ly[:1])  # {b} != {a}
        assert op[2] is True
        assert op[1] is False
        assert op[0] is True

    def test_geometric_non_inclusiveness(self):
        # A 3-point instance where A_2 = 1 but A_1 < 1: the reduction
        # swaps point 0's nearest neighbor while k=2 sets are forced equal.
        x = VectorSet(np.array([[0.0], [1.0], [3.0]]))
        y = VectorSet(np.array([[0.0, 0.0], [2.0, 0.0], [1.0, 0.0]]))
        a2 = accuracy(knn_table(x, 2, Metric.L2), knn_table(y, 2, Metric.L2))
        a1 = accuracy(knn_table(x, 1, Metric.L2), knn_table(y, 1, Metric.L2))
        assert a2.accuracy == 1.0
        assert a1.accuracy < 1.0
