"""Means generated by measures.

Each measure in the catalog turns the weighted centroid
mean(H) = (integral of x dmu) / mu(H) into a familiar two-argument mean
when H is a single interval [a, b] -- and keeps making sense when H is any
finite union of intervals.
"""

import math

from meanmeasure import catalog, decompose_check, mean, normalize, ordinary

a, b = 2.0, 8.0
print(f"two-argument means of ({a}, {b}):")
print(f"  lebesgue    -> {ordinary(catalog('lebesgue'), a, b):.12f}"
      f"   (arithmetic {0.5 * (a + b):.12f})")
print(f"  geometric   -> {ordinary(catalog('geometric'), a, b):.12f}"
      f"   (sqrt(ab)  {math.sqrt(a * b):.12f})")
print(f"  harmonic    -> {ordinary(catalog('harmonic'), a, b):.12f}"
      f"   (2ab/(a+b) {2 * a * b / (a + b):.12f})")
print(f"  logarithmic -> {ordinary(catalog('logarithmic'), a, b):.12f}"
      f"   ((a-b)/log(a/b) {(a - b) / math.log(a / b):.12f})")

# the same measures evaluate on interval unions
H = normalize([(1, 2), (4, 8), (16, 17)])
print(f"\nset means of H = {H.intervals}:")
for name in ("lebesgue", "geometric", "harmonic", "logarithmic"):
    r = mean(catalog(name), H)
    print(f"  {name:<12} value={r.value:.10f}  mass={r.mass:.6e}  err<{r.err:.1e}")

# the mean of a disjoint union is the mass-weighted mix of the parts
parts = [normalize([(1, 2)]), normalize([(4, 8)]), normalize([(16, 17)])]
print("\nweighted-decomposition residual (geometric):",
      decompose_check(catalog("geometric"), parts))
