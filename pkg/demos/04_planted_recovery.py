"""
Recovering planted blocks by coarse-grained iteration
=====================================================

A single max-selection pass fragments each planted block into several
small cores: every community grows around one mutual-nearest pair, and a
block of 25 nodes contains a handful of those. The fix is built into the
method - treat the detected communities as coarse nodes, sum their
citation blocks, and detect again. With disconnected blocks the iteration
stops by itself exactly at the planted partition (similarity between the
remaining components is zero, so no further pairs are emitted).
"""

from simpair import (
    FIXPOINT,
    Strategy,
    SyntheticSpec,
    detect,
    generate_planted_citation_matrix,
    nmi,
    planted_recovery,
)

spec = SyntheticSpec()  # 4 blocks x 25 nodes, no cross-block citations
matrix, truth = generate_planted_citation_matrix(spec)

one_pass = detect(matrix, Strategy("max"), levels=1)
print(f"one pass:   {one_pass.real.n_communities:>3} real communities, "
      f"NMI vs truth = {nmi(one_pass.real, truth):.3f}")

iterated = detect(matrix, Strategy("max"), levels=FIXPOINT)
print(f"iterated:   {iterated.real.n_communities:>3} real communities, "
      f"NMI vs truth = {nmi(iterated.real, truth):.3f}")

print("\nlevel history (coarse nodes -> real communities):")
for stats in iterated.level_stats:
    print(f"  level {stats['level']}: {stats['coarse_nodes']:>3} -> {stats['reals']:>3}")

print("\nrecovery across 20 fresh matrices:",
      [round(v, 3) for v in planted_recovery(spec, n_seeds=20)])

# With cross-block citations the coarse similarities never reach zero, so
# the fixed point is a single community; stop at a chosen level instead.
noisy = SyntheticSpec(cross_rate=1.0, seed=3)
noisy_matrix, noisy_truth = generate_planted_citation_matrix(noisy)
for levels in (1, 2, 3):
    d = detect(noisy_matrix, Strategy("max"), levels=levels)
    print(f"cross-rate 1.0, levels={levels}: {d.real.n_communities:>3} communities, "
          f"NMI vs truth = {nmi(d.real, noisy_truth):.3f}")
