"""
Growing communities from a ranked pair list
===========================================

Detection consumes node pairs in order of decreasing similarity. A pair of
two unknown nodes founds a core community; a pair with one known node
joins the newcomer to that core; a pair bridging two existing cores is a
"tide" and merges them only at the coarser real level.

The ten pairs below walk through every case: (2,3) and (5,10) found cores,
(1,2) joins, (6,9) founds a third, and (9,5) is a tide - so cores stay
{2,3,1,7} / {5,10,8,4} / {6,9} while the real level sees the last two as
one community.
"""

from simpair import RankedPair, build_communities, extract_partition, partition_stats

pairs = [
    RankedPair(2, 3, 0.4988),
    RankedPair(3, 2, 0.4988),
    RankedPair(5, 10, 0.3311),
    RankedPair(10, 5, 0.3311),
    RankedPair(1, 2, 0.2211),
    RankedPair(6, 9, 0.2209),
    RankedPair(9, 5, 0.2109),
    RankedPair(8, 10, 0.1667),
    RankedPair(4, 8, 0.1521),
    RankedPair(7, 1, 0.1456),
]

result = build_communities(pairs, n_nodes=11)  # node 0 is never mentioned

print("core communities (insertion order preserved):")
for core in result.cores:
    print(f"  core {core.id}: {list(core.members)}  "
          f"(founded by {core.founding_pair.selector}-{core.founding_pair.selected})")

print("\ntides:")
for tide in result.tides:
    print(f"  ({tide.pair.selector},{tide.pair.selected}) "
          f"bridges core {tide.core_a} and core {tide.core_b}")

print("\nreal communities:")
for real in result.reals:
    print(f"  real {real.id}: {list(real.members)}  (cores {list(real.core_ids)})")

print("\nunassigned nodes:", list(result.unassigned))
print("\nheadline counts:", {k: v for k, v in partition_stats(result).items()
                             if k in ("cores", "reals", "tides", "unassigned")})

core_part = extract_partition(result, "core")
real_part = extract_partition(result, "real")
print("\ncore labels:", core_part.labels.tolist())
print("real labels:", real_part.labels.tolist())
