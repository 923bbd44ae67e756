"""
Citation patterns and cosine similarity
=======================================

A node's citation pattern is its row of outgoing citation counts divided
by the row total, so journals of very different sizes become comparable.
Similarity between two nodes is the cosine of the angle between their
patterns: 1.0 for proportional rows, 0.0 for rows citing disjoint targets.
"""

import numpy as np

from simpair import CitationMatrix, build_similarity_matrix, normalize_rows

# Six journals: 0-2 cite within one field, 3-5 within another, and
# journal 2 occasionally cites across the aisle.
counts = np.array([
    [0, 8, 4, 0, 0, 0],
    [6, 0, 5, 0, 0, 0],
    [4, 6, 0, 2, 0, 0],
    [0, 0, 0, 0, 9, 3],
    [0, 0, 1, 7, 0, 5],
    [0, 0, 0, 4, 8, 0],
])
matrix = CitationMatrix.from_dense(counts)

print("normalized rows (sparse maps):")
for i, row in enumerate(normalize_rows(matrix)):
    print(f"  node {i}: {dict(sorted(row.entries.items()))}")

sim = build_similarity_matrix(matrix)
print("\nsimilarity matrix (diagonal excluded, stored as 0):")
print(np.round(sim.values, 3))

# Scaling a row leaves its pattern unchanged: similarities are about
# citation *habits*, not volume.
doubled = counts.copy()
doubled[0] *= 10
sim2 = build_similarity_matrix(CitationMatrix.from_dense(doubled))
print("\nmax change after scaling row 0 by 10:",
      np.abs(sim.values - sim2.values).max())
