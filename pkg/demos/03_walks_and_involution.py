"""Signed lattice-walk sums and the involution that makes them work.

Each multigraph becomes a walk whose labels record matching depths.  Summing
walk counts over the points (1 - pi(1), ..., d - pi(d)) with the sign of pi
cancels every walk that is not such an image; the cancelling partner of a
bad walk is given by an explicit involution.
"""

from planar_count.multigraph import enumerate_multigraphs, expand_configuration
from planar_count.oracle import brute_g
from planar_count.walks import (
    Phi,
    check_condition_C,
    count_chamber_walks,
    endpoint,
    enumerate_restricted_walks,
    parse_walk,
    phi,
    rho,
    signed_toeplitz_sum,
)

g = list(enumerate_multigraphs(2, 2))[1]
w = Phi(expand_configuration(g), d=2)
print("graph", g.mult, "-> walk", w, "ending at", endpoint(w))
print("and back:", phi(w).pairing)

bad = parse_walk("12|21")
print("\n", bad, "satisfies the order condition?", check_condition_C(bad))
partner = rho(bad)
print(" partner", partner, "ends at", endpoint(partner), "instead of", endpoint(bad))

n, r, d = 2, 2, 2
good = bad_count = 0
for walk in enumerate_restricted_walks(d, n, r):
    if check_condition_C(walk)[0]:
        good += 1
    else:
        bad_count += 1
print(f"\nwalks to Toeplitz points with n={n} r={r} d={d}: {good} images, {bad_count} cancelling")

print("\n n  r  d  signed sum  chamber  brute")
for n, r, d in [(3, 1, 2), (4, 1, 2), (3, 2, 2), (2, 3, 2), (4, 2, 3)]:
    print(f"{n:2d} {r:2d} {d:2d} {signed_toeplitz_sum(d, n, r):11d} {count_chamber_walks(d, n, r):8d} {brute_g(n, r, d):6d}")
