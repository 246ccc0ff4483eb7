"""Structural probes: inequalities, monotonicity, continuity.

The mean respects disjoint unions monotonically, is continuous along
descending chains and in the symmetric-difference pseudo-metric on bounded
windows, and comparisons between two measures can be certified from a
density-ratio condition.
"""

from meanmeasure import (
    cantor_probe,
    catalog,
    certify_leq,
    monotonicity_probe,
    normalize,
    pseudo_metric,
)
from meanmeasure.verify import counterexample_unbounded_window

geo, leb = catalog("geometric"), catalog("lebesgue")

# arithmetic-geometric inequality, certified for every interval union
cert = certify_leq(geo, leb, (0.1, 100.0), rng=0)
print("geometric <= centroid on (0.1, 100):", cert.status)
cert = certify_leq(leb, geo, (0.1, 100.0), rng=0)
print("reverse direction:", cert.status, "- witness interval",
      tuple(round(v, 4) for v in cert.witness["interval"]))

# adjoining sets with larger means pulls the mean up, never past them
report = monotonicity_probe(geo, normalize([(1, 2)]), normalize([(4, 8)]),
                            normalize([(9, 16)]))
print("\nmonotonicity probe:", {k: round(v, 6) for k, v in report.values.items()})
print("  between the parts:", report.disjoint_pass,
      " union direction:", report.union_pass,
      " strictness:", report.strict_pass)

# shrinking a chain of sets onto its intersection drags the mean along
base = normalize([(1.0, 2.0)])
chain = [base.union(normalize([(3.0, 3.0 + 2.0 ** -i)])) for i in range(12)]
chain.append(base)
gaps = cantor_probe(geo, chain)
print("\nchain gaps:", [f"{g:.2e}" for g in gaps[::3]])

# continuity in the pseudo-metric needs the bounded window: a far-away
# sliver of tiny measure can still yank the centroid
probe = counterexample_unbounded_window(delta=0.01)
print("\nunbounded window counterexample:")
print(f"  d(H1, H2) = {probe['distance']:.4f}  but Avg jumps "
      f"{probe['avg_before']:.2f} -> {probe['avg_after']:.4f}")
H1 = normalize([(0.0, 1.0)])
H2 = H1.union(normalize([(100.0, 100.01)]))
print("  pseudo-metric check:", pseudo_metric(leb, H1, H2))
