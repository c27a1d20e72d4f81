"""
Generalized Demazure crystal for A2
===================================

Build B_{i,m} for the word (1,2,1) with m = (1,1,1), peel one element
apart factor by factor, and compare the string vectors with the
lattice points cut out by the inequalities.
"""

from gendem import enumerate_gendem, lattice_points, parse_type
from gendem.gendem import omega_prime, peel, transform_matrices

cd = parse_type("A2")
word, m = (1, 2, 1), (1, 1, 1)

# the crystal sits inside B(w1) (x) B(w2) (x) B(w1)
g = enumerate_gendem(cd, word, m)
print("elements:", len(g))
for a in g.omega_image():
    print("  ", a)

# pick the element with string vector (1,1,1) and peel it
b = g.by_omega[(1, 1, 1)]
for step in peel(cd, word, b):
    print("step", step[0], "e-string length", step[2], "phi", step[3])

# the reversed parameterization is an affine image of the original one
A, B = transform_matrices(cd, word)
print("A =", A)
print("B =", B)
print("omega' of (1,1,1):", omega_prime(cd, word, b))

# same set from the polytope side
pts = lattice_points(cd, word, m)
print("lattice points agree:", pts == g.omega_image())
