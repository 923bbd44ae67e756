"""Partner selection: one ranked pair list per strategy.

Every strategy walks the similarity matrix and emits directed
(selector, selected, similarity) triples, one batch per node, then sorts
them by decreasing similarity. Strategies:

* ``max``      - each node pairs with its highest-similarity partner(s);
                 exact ties all get emitted.
* ``psim``     - each node samples one partner with probability
                 proportional to similarity (optionally restricted to the
                 top-n most similar candidates).
* ``p``        - each node samples one partner uniformly.
* ``max`` + a deletion mask - max over the surviving entries only.
* mixed       - per node, a seeded coin picks between max and a random
                 strategy; the boundary probabilities reproduce the pure
                 strategies byte for byte.

Nodes with no positive candidate mass (all-zero or fully deleted rows)
emit nothing and surface downstream as singleton communities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .rng import GATE_STREAM, MASK_STREAM, PARTNER_STREAM, node_stream
from .similarity import SimilarityMatrix


class RankedPair(NamedTuple):
    selector: int
    selected: int
    similarity: float


RANDOM_KINDS = ("psim", "p")


@dataclass(frozen=True)
class Strategy:
    """Tagged selection strategy with its parameters.

    kind: "max" | "psim" | "p" | "mixed"
    topn:      candidate cutoff for psim (None means all candidates)
    deletion:  per-row fraction of similarities to hide from max
    mix_p:     probability of the random branch in a mixed strategy
    mix_kind:  which random strategy the mixed coin switches to
    """

    kind: str
    topn: int | None = None
    deletion: float | None = None
    mix_p: float | None = None
    mix_kind: str | None = None

    def __post_init__(self):
        if self.kind not in ("max", "psim", "p", "mixed"):
            raise ValueError(f"unknown strategy kind {self.kind!r}")
        if self.topn is not None:
            if self.kind != "psim":
                raise ValueError("topn only applies to psim")
            if self.topn < 1:
                raise ValueError("topn must be >= 1")
        if self.deletion is not None:
            if self.kind != "max":
                raise ValueError("deletion only applies to max")
            if not 0.0 <= self.deletion <= 1.0:
                raise ValueError("deletion fraction must be in [0, 1]")
        if self.kind == "mixed":
            if self.mix_kind not in RANDOM_KINDS:
                raise ValueError("mixed strategy needs mix_kind 'psim' or 'p'")
            if self.mix_p is None or not 0.0 <= self.mix_p <= 1.0:
                raise ValueError("mixed strategy needs mix_p in [0, 1]")

    def describe(self) -> dict:
        out = {"kind": self.kind}
        if self.topn is not None:
            out["topn"] = self.topn
        if self.deletion is not None:
            out["deletion"] = self.deletion
        if self.kind == "mixed":
            out["mix_p"] = self.mix_p
            out["mix_kind"] = self.mix_kind
        return out


@dataclass(frozen=True)
class SimilarityMask:
    """Per-row sets of hidden columns, from random deletion.

    Deletion is row-local: node i may lose sight of j while j still sees i.
    """

    deleted: tuple[np.ndarray, ...]
    fraction: float
    seed: int

    def n_deleted_per_row(self) -> int:
        return len(self.deleted[0]) if self.deleted else 0


def sort_pairs(pairs: list[RankedPair]) -> list[RankedPair]:
    """Decreasing similarity; ties by (selector, selected) ascending."""
    return sorted(pairs, key=lambda p: (-p.similarity, p.selector, p.selected))


def apply_random_deletion(s: SimilarityMatrix, d: float, seed: int) -> SimilarityMask:
    """Hide a uniform random floor(d*(N-1)) columns in each row."""
    if not 0.0 <= d <= 1.0:
        raise ValueError("deletion fraction must be in [0, 1]")
    n = s.n_nodes
    k = int(np.floor(d * (n - 1)))
    deleted = []
    for i in range(n):
        candidates = np.delete(np.arange(n), i)
        if k == 0:
            chosen = np.empty(0, dtype=np.int64)
        else:
            rng = node_stream(seed, i, MASK_STREAM)
            chosen = np.sort(rng.choice(candidates, size=k, replace=False))
        deleted.append(chosen.astype(np.int64))
    return SimilarityMask(deleted=tuple(deleted), fraction=d, seed=seed)


def _max_pairs_for_node(s: SimilarityMatrix, i: int, mask: SimilarityMask | None) -> list[RankedPair]:
    row = s.values[i].copy()
    if mask is not None and len(mask.deleted[i]):
        row[mask.deleted[i]] = -1.0  # hidden: below any real similarity
    m = row.max()
    if m <= 0.0:
        return []
    return [RankedPair(i, int(j), float(m)) for j in np.flatnonzero(row == m)]


def select_max(s: SimilarityMatrix, mask: SimilarityMask | None = None) -> list[RankedPair]:
    """Every node pairs with all of its maximum-similarity partners."""
    if s.n_nodes < 2:
        raise ValueError("need at least 2 nodes")
    pairs = []
    for i in range(s.n_nodes):
        pairs.extend(_max_pairs_for_node(s, i, mask))
    return sort_pairs(pairs)


def _psim_pick(s: SimilarityMatrix, i: int, topn: int | None, rng: np.random.Generator) -> RankedPair | None:
    n = s.n_nodes
    row = s.values[i]
    candidates = np.delete(np.arange(n), i)
    if topn is not None and topn < n - 1:
        # rank by similarity desc, node id asc; boundary ties go to lower ids
        order = np.lexsort((candidates, -row[candidates]))
        candidates = np.sort(candidates[order[:topn]])
    weights = row[candidates]
    total = weights.sum()
    if total <= 0.0:
        return None
    cdf = np.cumsum(weights / total)
    j = int(candidates[min(np.searchsorted(cdf, rng.random(), side="right"),
                           len(candidates) - 1)])
    return RankedPair(i, j, float(s.values[i, j]))


def _uniform_pick(s: SimilarityMatrix, i: int, rng: np.random.Generator) -> RankedPair:
    n = s.n_nodes
    j = int(rng.integers(n - 1))
    if j >= i:
        j += 1
    return RankedPair(i, j, float(s.values[i, j]))


def select_psim(s: SimilarityMatrix, seed: int, topn: int | None = None) -> list[RankedPair]:
    """Each node samples one partner with probability proportional to similarity.

    With ``topn`` set, only the top-n most similar candidates are eligible
    (ties at the cutoff resolved toward the lower node id). Nodes whose
    candidate similarities sum to zero emit nothing.
    """
    if s.n_nodes < 2:
        raise ValueError("need at least 2 nodes")
    pairs = []
    for i in range(s.n_nodes):
        pick = _psim_pick(s, i, topn, node_stream(seed, i, PARTNER_STREAM))
        if pick is not None:
            pairs.append(pick)
    return sort_pairs(pairs)


def select_random(s: SimilarityMatrix, seed: int) -> list[RankedPair]:
    """Each node samples one partner uniformly over all other nodes."""
    if s.n_nodes < 2:
        raise ValueError("need at least 2 nodes")
    pairs = [_uniform_pick(s, i, node_stream(seed, i, PARTNER_STREAM))
             for i in range(s.n_nodes)]
    return sort_pairs(pairs)


def select_mixed(s: SimilarityMatrix, p: float, random_kind: str, seed: int) -> list[RankedPair]:
    """Per-node coin: with probability p use the random strategy, else max.

    The gate draw and the partner draw use separate per-node streams, so
    p=0 reproduces select_max exactly and p=1 reproduces the pure random
    strategy (same seed) exactly.
    """
    if s.n_nodes < 2:
        raise ValueError("need at least 2 nodes")
    if random_kind not in RANDOM_KINDS:
        raise ValueError(f"random_kind must be one of {RANDOM_KINDS}")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    pairs = []
    for i in range(s.n_nodes):
        gate = node_stream(seed, i, GATE_STREAM)
        if gate.random() < p:
            rng = node_stream(seed, i, PARTNER_STREAM)
            if random_kind == "psim":
                pick = _psim_pick(s, i, None, rng)
                if pick is not None:
                    pairs.append(pick)
            else:
                pairs.append(_uniform_pick(s, i, rng))
        else:
            pairs.extend(_max_pairs_for_node(s, i, None))
    return sort_pairs(pairs)


def select_pairs(s: SimilarityMatrix, strategy: Strategy, seed: int = 0) -> list[RankedPair]:
    """Dispatch a Strategy descriptor to the matching selection routine."""
    if strategy.kind == "max":
        mask = None
        if strategy.deletion is not None and strategy.deletion > 0.0:
            mask = apply_random_deletion(s, strategy.deletion, seed)
        return select_max(s, mask)
    if strategy.kind == "psim":
        return select_psim(s, seed, strategy.topn)
    if strategy.kind == "p":
        return select_random(s, seed)
    return select_mixed(s, strategy.mix_p, strategy.mix_kind, seed)
