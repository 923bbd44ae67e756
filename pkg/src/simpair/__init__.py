"""Two-level community detection on weighted citation networks.

Nodes pair with their most similar partners (or randomized stand-ins);
pairs grow fine-grained core communities, and the pairs that bridge cores
("tides") merge them into coarse real communities. The package covers the
full workflow: similarity from citation counts, five selection strategies,
community growth, NMI scoring, planted-partition synthesis, and seeded
parameter sweeps.
"""

from .citations import CitationMatrix, NormalizedRow, normalize_rows
from .communities import (
    CORE,
    REAL,
    CoreCommunity,
    DetectionResult,
    Partition,
    RealCommunity,
    Tide,
    UnionFind,
    build_communities,
    extract_partition,
    renormalize,
)
from .metrics import entropy, joint_entropy, nmi, partition_stats
from .pipeline import FIXPOINT, Detection, detect, detect_from_pairs
from .selection import (
    RankedPair,
    SimilarityMask,
    Strategy,
    apply_random_deletion,
    select_max,
    select_mixed,
    select_pairs,
    select_psim,
    select_random,
    sort_pairs,
)
from .similarity import SimilarityMatrix, build_similarity_matrix, cosine_similarity
from .sweeps import (
    ExperimentConfig,
    SweepResult,
    SweepRow,
    planted_recovery,
    run_deletion_sweep,
    run_probability_sweep,
    run_topn_sweep,
)
from .synthetic import SyntheticSpec, generate_planted_citation_matrix

__version__ = "0.1.0"

__all__ = [
    "CORE",
    "REAL",
    "FIXPOINT",
    "CitationMatrix",
    "NormalizedRow",
    "normalize_rows",
    "SimilarityMatrix",
    "build_similarity_matrix",
    "cosine_similarity",
    "RankedPair",
    "SimilarityMask",
    "Strategy",
    "apply_random_deletion",
    "select_max",
    "select_mixed",
    "select_pairs",
    "select_psim",
    "select_random",
    "sort_pairs",
    "CoreCommunity",
    "RealCommunity",
    "Tide",
    "DetectionResult",
    "Partition",
    "UnionFind",
    "build_communities",
    "extract_partition",
    "renormalize",
    "entropy",
    "joint_entropy",
    "nmi",
    "partition_stats",
    "Detection",
    "detect",
    "detect_from_pairs",
    "SyntheticSpec",
    "generate_planted_citation_matrix",
    "ExperimentConfig",
    "SweepResult",
    "SweepRow",
    "planted_recovery",
    "run_probability_sweep",
    "run_topn_sweep",
    "run_deletion_sweep",
]
