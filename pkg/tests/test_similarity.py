"""Similarity computation against a from-scratch dense oracle."""

import math

import numpy as np
import pytest

from simpair import (
    CitationMatrix,
    NormalizedRow,
    build_similarity_matrix,
    cosine_similarity,
    normalize_rows,
)
from simpair.similarity import similarity_matrix_naive


def oracle_similarity(dense):
    """Independent reference: plain loops over a dense count grid."""
    dense = np.asarray(dense, dtype=float)
    n = dense.shape[0]
    rows = []
    for i in range(n):
        total = dense[i].sum()
        rows.append(dense[i] / total if total > 0 else np.zeros(n))
    s = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            num = sum(rows[i][k] * rows[j][k] for k in range(n))
            na = math.sqrt(sum(v * v for v in rows[i]))
            nb = math.sqrt(sum(v * v for v in rows[j]))
            s[i, j] = num / (na * nb) if na > 0 and nb > 0 else 0.0
    return s


def random_citations(rng, n, density=0.4, max_count=9):
    dense = rng.integers(0, max_count + 1, size=(n, n))
    dense[rng.random((n, n)) > density] = 0
    np.fill_diagonal(dense, rng.integers(0, 3, size=n))
    return dense


class TestNormalizeRows:
    def test_equal_split(self):
        m = CitationMatrix.from_dense([[0, 2, 2], [0, 0, 0], [1, 0, 0]])
        rows = normalize_rows(m)
        assert rows[0].entries == {1: 0.5, 2: 0.5}
        assert not rows[0].zero_row

    def test_zero_row_flagged(self):
        m = CitationMatrix.from_dense([[0, 2, 2], [0, 0, 0], [1, 0, 0]])
        rows = normalize_rows(m)
        assert rows[1].entries == {}
        assert rows[1].zero_row

    def test_quarter_split(self):
        m = CitationMatrix.from_dense([[0, 1, 3], [0, 0, 0], [0, 0, 0]])
        rows = normalize_rows(m)
        assert rows[0].entries == pytest.approx({1: 0.25, 2: 0.75})

    def test_rows_sum_to_one(self):
        rng = np.random.default_rng(7)
        m = CitationMatrix.from_dense(random_citations(rng, 12))
        for row in normalize_rows(m):
            if not row.zero_row:
                assert sum(row.entries.values()) == pytest.approx(1.0, abs=1e-12)


class TestCosineSimilarity:
    def test_identical_rows(self):
        a = NormalizedRow(entries={0: 0.5, 2: 0.5})
        assert cosine_similarity(a, a) == pytest.approx(1.0, abs=1e-12)

    def test_disjoint_support(self):
        a = NormalizedRow(entries={0: 1.0})
        b = NormalizedRow(entries={1: 1.0})
        assert cosine_similarity(a, b) == 0.0

    def test_half_overlap(self):
        a = NormalizedRow(entries={0: 0.5, 1: 0.5})
        b = NormalizedRow(entries={1: 0.5, 2: 0.5})
        assert cosine_similarity(a, b) == pytest.approx(0.5, abs=1e-12)

    def test_zero_row_gives_zero(self):
        a = NormalizedRow(entries={}, zero_row=True)
        b = NormalizedRow(entries={0: 1.0})
        assert cosine_similarity(a, b) == 0.0
        assert cosine_similarity(a, a) == 0.0


class TestBuildSimilarityMatrix:
    def test_identical_rows_fully_similar(self):
        m = CitationMatrix.from_dense([[0, 0, 5], [0, 0, 3], [1, 1, 0]])
        s = build_similarity_matrix(m)
        assert s.values[0, 1] == pytest.approx(1.0, abs=1e-12)

    def test_matches_oracle_on_random_matrices(self):
        rng = np.random.default_rng(42)
        for _ in range(25):
            n = int(rng.integers(2, 33))
            dense = random_citations(rng, n)
            got = build_similarity_matrix(CitationMatrix.from_dense(dense)).values
            want = oracle_similarity(dense)
            np.fill_diagonal(want, 0.0)
            assert np.abs(got - want).max() <= 1e-12

    def test_symmetry_is_bitwise(self):
        rng = np.random.default_rng(3)
        dense = random_citations(rng, 20)
        s = build_similarity_matrix(CitationMatrix.from_dense(dense)).values
        assert np.array_equal(s, s.T)

    def test_range(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            dense = random_citations(rng, 16)
            s = build_similarity_matrix(CitationMatrix.from_dense(dense)).values
            assert s.min() >= 0.0
            assert s.max() <= 1.0 + 1e-12

    def test_row_scale_invariance(self):
        rng = np.random.default_rng(5)
        dense = random_citations(rng, 10)
        scaled = dense.copy()
        scaled[3] *= 7  # positive integer rescaling of one raw row
        s1 = build_similarity_matrix(CitationMatrix.from_dense(dense)).values
        s2 = build_similarity_matrix(CitationMatrix.from_dense(scaled)).values
        assert np.abs(s1 - s2).max() <= 1e-12

    def test_naive_path_agrees(self):
        rng = np.random.default_rng(17)
        dense = random_citations(rng, 8)
        m = CitationMatrix.from_dense(dense)
        fast = build_similarity_matrix(m).values
        slow = similarity_matrix_naive(m).values
        assert np.abs(fast - slow).max() <= 1e-12

    def test_zero_rows_isolated(self):
        m = CitationMatrix.from_dense([[0, 0, 0], [0, 0, 1], [0, 1, 0]])
        s = build_similarity_matrix(m)
        assert s.values[0].max() == 0.0
        assert s.values[:, 0].max() == 0.0
