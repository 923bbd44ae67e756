"""Parameter sweeps: how detection degrades as randomness is dialed in.

Three sweeps mirror the standard protocols: mixing random partner choice
into max selection (probability grid), restricting proportional sampling
to the top-n candidates, and deleting a fraction of each node's similarity
row. Every sweep scores its runs against a reference partition - by
default the deterministic max-selection run on the same input - with
normalized mutual information at both community levels.

Repetition r at grid point g runs with ``derive_seed(base_seed, g, r)``;
the two random kinds share that seed, so psim-vs-p comparisons are paired.
Results are pure functions of (input matrix, config): rerunning a sweep
reproduces its CSV byte for byte, regardless of worker count.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

from .citations import CitationMatrix
from .communities import CORE, REAL, Partition, build_communities, extract_partition
from .metrics import nmi, partition_stats
from .pipeline import FIXPOINT, Strategy, detect
from .rng import derive_seed
from .selection import select_pairs
from .similarity import SimilarityMatrix, build_similarity_matrix
from .synthetic import SyntheticSpec, generate_planted_citation_matrix

QUANTITIES = ("cores", "reals", "tides", "nmi_core", "nmi_real")


@dataclass(frozen=True)
class ExperimentConfig:
    """Shared sweep settings.

    ``reference`` is either "max" (score against the deterministic max run
    on the input) or a Partition such as a planted truth, used at both
    levels. ``jobs`` > 1 runs repetitions in worker threads; aggregation
    order is fixed, so results do not depend on it.
    """

    repetitions: int = 20
    base_seed: int = 0
    tide_count: str = "events"
    reference: str | Partition = "max"
    jobs: int = 1

    def __post_init__(self):
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.tide_count not in ("events", "merges"):
            raise ValueError("tide_count must be 'events' or 'merges'")


@dataclass(frozen=True)
class SweepRow:
    grid_value: float
    kind: str
    repetitions: int
    seeds: tuple[int, ...]
    mean: dict[str, float]
    std: dict[str, float]


@dataclass(frozen=True)
class SweepResult:
    sweep: str
    rows: list[SweepRow]
    metadata: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        header = ["sweep", "grid", "kind", "reps"]
        for q in QUANTITIES:
            header += [f"{q}_mean", f"{q}_std"]
        lines = [",".join(header)]
        for row in self.rows:
            cells = [self.sweep, f"{row.grid_value:g}", row.kind, str(row.repetitions)]
            for q in QUANTITIES:
                cells += [f"{row.mean[q]:.6f}", f"{row.std[q]:.6f}"]
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


def _reference_partitions(matrix: CitationMatrix,
                          cfg: ExperimentConfig) -> tuple[Partition, Partition]:
    if isinstance(cfg.reference, Partition):
        return cfg.reference, cfg.reference
    if cfg.reference != "max":
        raise ValueError("reference must be 'max' or a Partition")
    ref = detect(matrix, Strategy("max"), seed=0, levels=1, tide_count=cfg.tide_count)
    return ref.core, ref.real


def _run_once(sim: SimilarityMatrix, n_nodes: int, strategy: Strategy, seed: int,
              cfg: ExperimentConfig, ref_core: Partition, ref_real: Partition) -> dict:
    pairs = select_pairs(sim, strategy, seed)
    result = build_communities(pairs, n_nodes)
    stats = partition_stats(result, cfg.tide_count)
    core = extract_partition(result, CORE)
    real = extract_partition(result, REAL)
    return {
        "cores": float(stats["cores"]),
        "reals": float(stats["reals"]),
        "tides": float(stats["tides"]),
        "nmi_core": nmi(core, ref_core),
        "nmi_real": nmi(real, ref_real),
    }


def _aggregate(sweep: str, tasks: list[tuple[int, float, str, Strategy]],
               matrix: CitationMatrix, cfg: ExperimentConfig,
               metadata: dict | None = None) -> SweepResult:
    """Run reps for every task and reduce to per-task mean/std rows.

    A task is (grid_index, grid_value, kind, strategy); the repetition seed
    depends on the grid index, not the kind, so kinds sharing a grid value
    run on paired seeds.
    """
    sim = build_similarity_matrix(matrix)
    ref_core, ref_real = _reference_partitions(matrix, cfg)

    jobs = []
    for t, (g, grid_value, kind, strategy) in enumerate(tasks):
        for r in range(cfg.repetitions):
            jobs.append((t, r, strategy, derive_seed(cfg.base_seed, g, r)))

    def run(job):
        t, r, strategy, seed = job
        return (t, r), _run_once(sim, matrix.n_nodes, strategy, seed, cfg,
                                 ref_core, ref_real)

    if cfg.jobs > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            outcomes = dict(pool.map(run, jobs))
    else:
        outcomes = dict(map(run, jobs))

    rows = []
    for t, (g, grid_value, kind, _strategy) in enumerate(tasks):
        runs = [outcomes[(t, r)] for r in range(cfg.repetitions)]
        seeds = tuple(derive_seed(cfg.base_seed, g, r) for r in range(cfg.repetitions))
        mean = {q: math.fsum(run[q] for run in runs) / len(runs) for q in QUANTITIES}
        std = {
            q: math.sqrt(math.fsum((run[q] - mean[q]) ** 2 for run in runs) / len(runs))
            for q in QUANTITIES
        }
        rows.append(SweepRow(grid_value=grid_value, kind=kind,
                             repetitions=cfg.repetitions, seeds=seeds,
                             mean=mean, std=std))
    return SweepResult(sweep=sweep, rows=rows, metadata=dict(metadata or {}))


def run_probability_sweep(matrix: CitationMatrix, cfg: ExperimentConfig,
                          p_grid: list[float] | None = None,
                          kinds: tuple[str, ...] = ("psim", "p")) -> SweepResult:
    """Mix random selection into max at each probability on the grid."""
    if p_grid is None:
        p_grid = default_probability_grid()
    if any(not 0.0 <= p <= 1.0 for p in p_grid):
        raise ValueError("probability grid values must be in [0, 1]")
    tasks = [(g, p, kind, Strategy("mixed", mix_p=p, mix_kind=kind))
             for g, p in enumerate(p_grid) for kind in kinds]
    return _aggregate("probability", tasks, matrix, cfg)


def run_topn_sweep(matrix: CitationMatrix, cfg: ExperimentConfig,
                   topn_grid: list[int]) -> SweepResult:
    """Proportional selection restricted to the top-n candidates, per n.

    Values of n beyond the candidate count are clamped with a warning.
    The metadata reports where mean real-level NMI first crosses below
    0.5, if it does.
    """
    if any(t < 1 for t in topn_grid):
        raise ValueError("topn grid values must be >= 1")
    limit = matrix.n_nodes - 1
    clamped = []
    for t in topn_grid:
        if t > limit:
            warnings.warn(f"topn={t} exceeds the {limit} available candidates; clamped")
            t = limit
        clamped.append(t)
    tasks = [(g, t, "psim", Strategy("psim", topn=t)) for g, t in enumerate(clamped)]
    result = _aggregate("topn", tasks, matrix, cfg)
    crossing = next((row.grid_value for row in result.rows
                     if row.mean["nmi_real"] < 0.5), None)
    return replace(result, metadata={**result.metadata,
                                     "nmi_real_below_half_at": crossing})


def run_deletion_sweep(matrix: CitationMatrix, cfg: ExperimentConfig,
                       d_grid: list[float] | None = None) -> SweepResult:
    """Max selection with a fraction of each similarity row hidden, per d."""
    if d_grid is None:
        d_grid = default_deletion_grid()
    if any(not 0.0 <= d <= 1.0 for d in d_grid):
        raise ValueError("deletion grid values must be in [0, 1]")
    tasks = [(g, d, "max", Strategy("max", deletion=d)) for g, d in enumerate(d_grid)]
    return _aggregate("deletion", tasks, matrix, cfg)


def default_probability_grid() -> list[float]:
    return [round(0.1 * i, 1) for i in range(11)]


def default_deletion_grid() -> list[float]:
    return [round(0.1 * i, 1) for i in range(10)]


def planted_recovery(spec: SyntheticSpec | None = None, n_seeds: int = 20,
                     base_seed: int = 0, levels: int = FIXPOINT) -> list[float]:
    """Real-level NMI against planted truth over fresh synthetic matrices.

    Detection is iterated to a fixed point by default: single-pass max
    selection fragments blocks into many small mutual-nearest-neighbor
    cores, and the coarse-grained iteration is what reassembles them.
    """
    spec = spec or SyntheticSpec()
    scores = []
    for r in range(n_seeds):
        seeded = replace(spec, seed=derive_seed(base_seed, r))
        matrix, truth = generate_planted_citation_matrix(seeded)
        detection = detect(matrix, Strategy("max"), seed=0, levels=levels)
        scores.append(nmi(detection.real, truth))
    return scores
