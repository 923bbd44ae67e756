"""Pairwise cosine similarity between citation patterns.

Each node's citation pattern is its row of the citation matrix divided by
the row sum; the similarity of two nodes is the cosine of the angle between
their patterns, so values live in [0, 1] regardless of citation volume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .citations import CitationMatrix, NormalizedRow, normalize_rows


@dataclass(frozen=True)
class SimilarityMatrix:
    """Symmetric node-by-node similarity values.

    The diagonal is stored as 0 and is never consulted: a node is not a
    candidate partner for itself.
    """

    values: np.ndarray

    @property
    def n_nodes(self) -> int:
        return self.values.shape[0]

    def row(self, i: int) -> np.ndarray:
        return self.values[i]


def cosine_similarity(a: NormalizedRow, b: NormalizedRow) -> float:
    """Cosine of two normalized rows; 0 if either row is all zero."""
    if a.zero_row or b.zero_row:
        return 0.0
    if len(b.entries) < len(a.entries):
        a, b = b, a
    dot = math.fsum(v * b.entries[k] for k, v in a.entries.items() if k in b.entries)
    if dot == 0.0:
        return 0.0
    na = math.sqrt(math.fsum(v * v for v in a.entries.values()))
    nb = math.sqrt(math.fsum(v * v for v in b.entries.values()))
    return dot / (na * nb)


def build_similarity_matrix(m: CitationMatrix) -> SimilarityMatrix:
    """All-pairs cosine similarity of row-normalized citation counts.

    The computation is vectorized through scipy sparse products and is
    bitwise deterministic; the upper triangle is mirrored so that
    values[i, j] and values[j, i] are the same float.
    """
    counts = m.counts.astype(np.float64)
    row_sums = np.asarray(counts.sum(axis=1)).ravel()
    inv = np.divide(1.0, row_sums, out=np.zeros_like(row_sums), where=row_sums > 0)
    frac = sparse.csr_array(counts.multiply(inv[:, None]))

    sq = np.asarray(frac.multiply(frac).sum(axis=1)).ravel()
    norms = np.sqrt(sq)
    inv_norm = np.divide(1.0, norms, out=np.zeros_like(norms), where=norms > 0)
    unit = sparse.csr_array(frac.multiply(inv_norm[:, None]))

    s = (unit @ unit.T).toarray()
    np.fill_diagonal(s, 0.0)
    s = np.triu(s) + np.triu(s, 1).T
    return SimilarityMatrix(values=s)


def similarity_matrix_naive(m: CitationMatrix) -> SimilarityMatrix:
    """Row-by-row reference path built on the scalar cosine.

    Same contract as :func:`build_similarity_matrix`; used to cross-check
    the vectorized path and for very small inputs.
    """
    rows = normalize_rows(m)
    n = m.n_nodes
    s = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            s[i, j] = s[j, i] = cosine_similarity(rows[i], rows[j])
    return SimilarityMatrix(values=s)
