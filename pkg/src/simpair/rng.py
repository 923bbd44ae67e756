"""Deterministic random-stream derivation.

All randomness in this package flows through numpy's PCG64 generator,
seeded through ``numpy.random.SeedSequence``. Streams are derived from an
integer path so that independent pieces of work (one node's partner draw,
one sweep repetition) get independent, reproducible substreams:

* partner draw for node ``i``          -> SeedSequence([seed, i])
* strategy gate for node ``i``         -> SeedSequence([seed, i, 1])
* deletion mask for row ``i``          -> SeedSequence([seed, i, 2])
* sweep repetition ``r`` at grid ``g`` -> SeedSequence([base, tag, g, r])

SeedSequence's mixing algorithm is fixed by numpy, so the same path always
yields the same stream regardless of platform or call order. That is what
makes per-node parallel selection deterministic.
"""

from __future__ import annotations

import numpy as np

PARTNER_STREAM = ()
GATE_STREAM = (1,)
MASK_STREAM = (2,)

_U64 = np.uint64


def node_stream(seed: int, node: int, purpose: tuple[int, ...] = PARTNER_STREAM) -> np.random.Generator:
    """Generator for one node's draws under the given purpose tag."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(node), *purpose]))


def derive_seed(base_seed: int, *path: int) -> int:
    """Collapse (base_seed, *path) into a single 64-bit seed.

    Used by the sweep engine: repetition r at grid point g runs with
    ``derive_seed(base_seed, tag, g, r)``, so every run's seed is a pure,
    stable function of the experiment configuration.
    """
    ss = np.random.SeedSequence([int(base_seed), *[int(p) for p in path]])
    return int(ss.generate_state(1, dtype=_U64)[0])
