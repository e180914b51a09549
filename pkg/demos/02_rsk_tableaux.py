"""Counting the same graphs through pairs of Young tableaux.

A configuration on rn copies is a permutation, and RSK turns it into a pair
of standard tableaux whose width is the longest increasing run.  Restricting
to tableaux where each block of r consecutive values descends strictly row by
row picks out exactly the canonical lifts of multigraphs.
"""

from planar_count.multigraph import enumerate_multigraphs, expand_configuration
from planar_count.oracle import brute_g
from planar_count.tableaux import check_condition_T, count_tableau_pairs, inverse_rsk, rsk

perm = (3, 6, 1, 4, 2, 5)
pair = rsk(perm)
print("permutation", perm)
print("  P rows:", pair.P.rows)
print("  Q rows:", pair.Q.rows)
print("  inverse RSK gives back", inverse_rsk(pair))

n, r = 3, 2
g = next(iter(enumerate_multigraphs(n, r)))
seq = tuple(v + 1 for v in expand_configuration(g).pairing)
lifted = rsk(seq)
print(f"\nlift of {g.mult}: {seq}")
print("  both tableaux satisfy the block condition:",
      check_condition_T(lifted.P, n, r) and check_condition_T(lifted.Q, n, r))

print("\n d  tableau pairs  brute force")
for d in range(1, n * r + 1):
    print(f"{d:2d}  {count_tableau_pairs(n, r, d):13d}  {brute_g(n, r, d):11d}")
