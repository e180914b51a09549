"""Largest planar matchings in small regular bipartite multigraphs.

Vertices on both sides are ordered; two edges cross unless both endpoints
move in the same direction.  We list every 2-regular multigraph on 3 + 3
vertices, group them by the size of their largest noncrossing matching, and
look at how each one lifts to a configuration.
"""

from collections import Counter

from planar_count import (
    configuration_count_of,
    enumerate_multigraphs,
    expand_configuration,
    planar_matching_size,
    planar_subgraph_size,
    project,
)

n, r = 3, 2
graphs = list(enumerate_multigraphs(n, r))
print(f"{len(graphs)} multigraphs with n={n}, r={r}")

by_size = Counter(planar_matching_size(g) for g in graphs)
for d in sorted(by_size):
    print(f"  largest planar matching {d}: {by_size[d]}")

# Cumulative counts: how many graphs have no planar matching larger than d.
running = 0
for d in range(n + 1):
    running += by_size.get(d, 0)
    print(f"g_{r}({n};{d}) = {running}")

example = graphs[len(graphs) // 2]
lift = expand_configuration(example)
print("\nexample multiplicities:", example.mult)
print("expanded pairing (U-copy -> V-copy):", lift.pairing)
print("projection recovers the graph:", project(lift) == example)
print("matching size of graph and lift:", planar_matching_size(example), planar_matching_size(lift))
print("planar subgraph (edges may share endpoints):", planar_subgraph_size(example))

print("\nconfigurations per graph add up to (rn)!:",
      sum(configuration_count_of(g) for g in graphs))
