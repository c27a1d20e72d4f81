"""
Cross-checking crystal and polytope
===================================

Run the full verification on a few words, including non-reduced ones.
"""

from gendem import parse_type
from gendem.polytope import verify

jobs = [
    ("A2", (1, 2, 1), (1, 1, 1)),
    ("A2", (1, 2, 1, 2), (1, 1, 1, 1)),
    ("A1", (1, 1, 1), (1, 1, 1)),
    ("C2", (2, 1, 2, 1), (1, 0, 1, 1)),
]

for name, word, m in jobs:
    rep = verify(parse_type(name), word, m, depth=2)
    print(name, word, m, "passed" if rep.passed else "FAILED")
    for c in rep.checks:
        print("   ", c.name, c.checked, "ok" if c.passed else c.counterexample)
