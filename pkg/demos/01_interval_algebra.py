"""Interval sets: the carrier for everything else.

A set is a finite union of closed intervals in canonical form: sorted,
disjoint, degenerate points dropped, touching pieces merged. All algebra
is exact on the endpoints (no epsilon fuzz).
"""

from meanmeasure import normalize

a = normalize([(0, 2), (5, 8)])
b = normalize([(1, 6)])
print("A            =", a.intervals)
print("B            =", b.intervals)
print("A union B    =", a.union(b).intervals)
print("A intersect B =", a.intersect(b).intervals)
print("A minus B    =", a.subtract(b).intervals)
print("A symdiff B  =", a.symdiff(b).intervals)

# touching intervals merge, degenerate points vanish, order is restored
messy = normalize([(3, 4), (1, 2), (2, 3), (9, 9)])
print("\nnormalize([(3,4),(1,2),(2,3),(9,9)]) =", messy.intervals)

# length, bounds, translation, half-line slices
h = normalize([(0, 1), (2, 4)])
print("\nH =", h.intervals)
print("total length     =", h.lebesgue())
print("inf, sup         =", h.infimum(), h.supremum())
print("H + 10           =", h.translate(10).intervals)
print("H below 3        =", h.slice_below(3).intervals)
print("H above 0.5      =", h.slice_above(0.5).intervals)
