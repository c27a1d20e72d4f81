"""
A vertex that is not a lattice point
====================================

For the non-reduced word (1,1,1) in A1 the polytope has a vertex at
(0, 1, 1/2). We recover it from the hull of scaled lattice points of
the first two dilations.
"""

from fractions import Fraction

from gendem import parse_type
from gendem.polytope import certify_vertex, convex_hull, dilation_sample

cd = parse_type("A1")
word, m = (1, 1, 1), (1, 1, 1)

sample = dilation_sample(cd, word, m, 2)
print(len(sample), "sample points")

hull = convex_hull(sample)
print("dimension", hull.dim)
for v in sorted(hull.vertices):
    print("vertex", tuple(str(x) for x in v), "certified:", certify_vertex(cd, word, m, v))
for normal, offset in hull.facets:
    print("facet", normal, "<=", offset)

print("(0,1,1/2) is a vertex:", (0, 1, Fraction(1, 2)) in hull.vertices)
