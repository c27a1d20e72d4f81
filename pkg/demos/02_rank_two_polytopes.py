"""
String polytopes in rank two
============================

Count lattice points of dilations for C2 and G2 words and check them
against the crystal sizes.
"""

import time

from gendem import enumerate_gendem, lattice_points, parse_type

cases = [
    ("C2", (1, 2, 1, 2)),
    ("C2", (2, 1, 2, 1)),
    ("G2", (1, 2, 1, 2, 1, 2)),
    ("G2", (2, 1, 2, 1, 2, 1)),
]

for name, word in cases:
    cd = parse_type(name)
    m = (1,) * len(word)
    for k in (1, 2):
        t0 = time.perf_counter()
        pts = lattice_points(cd, word, m, k)
        t1 = time.perf_counter()
        # crystal side, only at k=1 to keep this quick
        size = len(enumerate_gendem(cd, word, m)) if k == 1 else None
        print(f"{name} {word} k={k}: {len(pts)} points ({t1 - t0:.2f}s)", "" if size is None else f"crystal {size}")
