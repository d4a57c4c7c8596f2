"""Distance functions: spot values and metric axioms."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from opdr import Metric, VectorSet, distance, pairwise_distances
from opdr.errors import DimensionMismatch, ZeroNormVector

finite_vectors = arrays(
    np.float64,
    st.integers(1, 6),
    elements=st.floats(-100, 100, allow_nan=False),
)


class TestDistance:
    def test_l1_example(self):
        assert distance(Metric.L1, (1, 2), (4, 6)) == 7.0

    def test_identity_of_indiscernibles(self):
        u = np.array([1.5, -2.0, 3.0])
        assert distance(Metric.L2, u, u) == 0.0
        assert distance(Metric.COSINE, u, u) == 0.0

    def test_cosine_orthogonal(self):
        assert distance(Metric.COSINE, (1, 0), (0, 1)) == 1.0

    def test_cosine_opposite(self):
        assert distance(Metric.COSINE, (1, 0), (-1, 0)) == pytest.approx(2.0)

    def test_cosine_zero_norm_rejected(self):
        with pytest.raises(ZeroNormVector):
            distance(Metric.COSINE, (0, 0), (1, 0))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            distance(Metric.L2, (1, 2), (1, 2, 3))

    @given(u=finite_vectors)
    def test_non_negative_and_symmetric(self, u):
        rng = np.random.default_rng(0)
        v = rng.normal(size=u.shape)
        for metric in (Metric.L1, Metric.L2):
            d_uv = distance(metric, u, v)
            assert d_uv >= 0
            assert d_uv == distance(metric, v, u)

    @settings(max_examples=200)
    @given(data=st.data(), dim=st.integers(1, 6))
    def test_triangle_inequality(self, data, dim):
        elems = st.floats(-50, 50, allow_nan=False)
        u, v, w = (
            data.draw(arrays(np.float64, dim, elements=elems)) for _ in range(3)
        )
        for metric in (Metric.L1, Metric.L2):
            lhs = distance(metric, u, w)
            rhs = distance(metric, u, v) + distance(metric, v, w)
            assert lhs <= rhs + 1e-9 * (1 + rhs)

    def test_cosine_scale_invariance(self):
        rng = np.random.default_rng(1)
        for _ in range(50):
            u = rng.normal(size=5)
            v = rng.normal(size=5)
            a, b = rng.uniform(0.1, 10, size=2)
            assert distance(Metric.COSINE, u, v) == pytest.approx(
                distance(Metric.COSINE, a * u, b * v), abs=1e-12
            )


class TestPairwise:
    def test_single_point(self):
        d = pairwise_distances(Metric.L2, VectorSet(np.array([[1.0, 2.0]])))
        assert d.shape == (1, 1) and d[0, 0] == 0.0

    def test_bit_exact_symmetry(self):
        rng = np.random.default_rng(2)
        vs = VectorSet(rng.normal(size=(17, 4)))
        for metric in Metric:
            d = pairwise_distances(metric, vs)
            assert np.array_equal(d, d.T)
            assert np.all(np.diag(d) == 0.0)

    def test_collinear_points(self):
        vs = VectorSet(np.array([[0.0], [1.0], [3.0]]))
        d = pairwise_distances(Metric.L2, vs)
        assert list(d[0]) == [0.0, 1.0, 3.0]

    def test_matches_scalar_distance(self):
        rng = np.random.default_rng(5)
        vs = VectorSet(rng.normal(size=(8, 3)))
        for metric in Metric:
            d = pairwise_distances(metric, vs)
            for i in range(8):
                for j in range(8):
                    if i != j:
                        assert d[i, j] == pytest.approx(
                            distance(metric, vs.data[i], vs.data[j]), abs=1e-15
                        )

    def test_cosine_zero_row_rejected(self):
        vs = VectorSet(np.array([[0.0, 0.0], [1.0, 0.0]]))
        with pytest.raises(ZeroNormVector):
            pairwise_distances(Metric.COSINE, vs)
