"""Exact Bessel determinants and the 2-regular, width-2 generating function.

The d x d determinant of I_|i-j|(2x) encodes permutations without long
increasing runs.  A 2 x 2 determinant with primitives of I_0 and a finite
differential operator does the same for 2-regular multigraphs with planar
matchings of size at most 2, read off at the powers x^(4n).
"""

from math import factorial

from planar_count.oracle import brute_g, brute_u
from planar_count.series import gessel_determinant, gessel_determinant_alt, theorem8_generating_function

for d in (2, 3):
    coeffs = gessel_determinant(d, 10).coefficients()
    print(f"d={d}:", [str(coeffs[2 * m] * factorial(m) ** 2) for m in range(6)],
          "vs", [brute_u(m, d) for m in range(6)])

print("primitive form equals the plain determinant:", gessel_determinant_alt(10) == gessel_determinant(2, 10))

gf = theorem8_generating_function(12)
for n in range(4):
    c = gf.coefficient(4 * n)
    print(f"x^{4 * n}: {c}  ->  {c * factorial(2 * n) ** 2} graphs (brute force {brute_g(n, 2, 2)})")
print("odd-step terms at x^(4n+2):", [str(gf.coefficient(e)) for e in (2, 6, 10)])
