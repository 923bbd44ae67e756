"""Citation count matrices and row normalization."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse


@dataclass(frozen=True)
class CitationMatrix:
    """Sparse nonnegative integer citation counts between nodes.

    Entry (i, j) is how often node i cites node j. Rows may be all zero
    (a node that cites nothing); those are kept, not dropped.
    """

    counts: sparse.csr_array
    node_labels: list[str] | None = None

    def __post_init__(self):
        c = self.counts
        if c.shape[0] != c.shape[1]:
            raise ValueError(f"citation matrix must be square, got {c.shape}")
        if c.nnz and c.data.min() < 0:
            raise ValueError("citation counts must be nonnegative")
        if self.node_labels is not None and len(self.node_labels) != c.shape[0]:
            raise ValueError("node_labels length does not match matrix size")

    @property
    def n_nodes(self) -> int:
        return self.counts.shape[0]

    @property
    def total_citations(self) -> int:
        return int(self.counts.sum())

    @classmethod
    def from_dense(cls, dense, node_labels=None) -> "CitationMatrix":
        arr = np.asarray(dense)
        return cls(sparse.csr_array(arr.astype(np.int64)), node_labels)

    @classmethod
    def from_entries(cls, n_nodes: int, entries, node_labels=None) -> "CitationMatrix":
        """Build from an iterable of (src, dst, count) triples.

        Duplicate (src, dst) pairs are summed.
        """
        rows, cols, vals = [], [], []
        for src, dst, count in entries:
            rows.append(src)
            cols.append(dst)
            vals.append(count)
        mat = sparse.coo_array(
            (np.asarray(vals, dtype=np.int64),
             (np.asarray(rows, dtype=np.int64), np.asarray(cols, dtype=np.int64))),
            shape=(n_nodes, n_nodes),
        ).tocsr()
        mat.sum_duplicates()
        return cls(mat, node_labels)

    def to_dense(self) -> np.ndarray:
        return self.counts.toarray()


@dataclass(frozen=True)
class NormalizedRow:
    """One node's outgoing citation frequencies, as a sparse map.

    ``entries`` maps cited node -> fraction of this node's citations going
    there; fractions sum to 1 unless the raw row was all zero, in which
    case ``entries`` is empty and ``zero_row`` is set.
    """

    entries: dict[int, float] = field(default_factory=dict)
    zero_row: bool = False


def normalize_rows(m: CitationMatrix) -> list[NormalizedRow]:
    """Divide each row by its sum; all-zero rows come back empty and flagged."""
    csr = m.counts
    out = []
    indptr, indices, data = csr.indptr, csr.indices, csr.data
    for i in range(m.n_nodes):
        lo, hi = indptr[i], indptr[i + 1]
        row_sum = int(data[lo:hi].sum()) if hi > lo else 0
        if row_sum == 0:
            out.append(NormalizedRow(entries={}, zero_row=True))
            continue
        entries = {
            int(j): float(v) / row_sum
            for j, v in zip(indices[lo:hi], data[lo:hi])
            if v != 0
        }
        out.append(NormalizedRow(entries=entries))
    return out
