"""The geometric mean of a set, and why exp(Avg(log H)) is not it.

For two numbers, the geometric mean is exp of the average log. One might
hope the same recipe extends to sets. It does not: on a two-interval set
the measure-weighted geometric mean and exp(Avg(log H)) disagree by more
than 10, and no measure can ever reproduce exp(Avg(log .)).
"""

import math

from meanmeasure import avg, catalog, exp_avg_log, mean, normalize

geo = catalog("geometric")
E = math.e

# on single intervals the two notions coincide
for a, b in [(1.0, 4.0), (2.0, 50.0)]:
    H = normalize([(a, b)])
    print(f"[{a}, {b}]: measure mean = {mean(geo, H).value:.10f}, "
          f"exp(Avg log) = {exp_avg_log(H):.10f}")

# on a union they split
H = normalize([(1.0, E ** 2), (E ** 4, E ** 8)])
by_measure = mean(geo, H).value
by_exp_log = exp_avg_log(H)
print(f"\nH = [1, e^2] u [e^4, e^8]")
print(f"  measure-weighted geometric mean = {by_measure:.6f}")
print(f"  exp(Avg(log H))                 = {by_exp_log:.6f}")
print(f"  gap                             = {by_exp_log - by_measure:.6f}")

# the arithmetic-geometric inequality survives the generalization
print(f"\nAvg(H) = {avg(H):.6f}  >=  geometric mean {by_measure:.6f}:",
      avg(H) >= by_measure)
