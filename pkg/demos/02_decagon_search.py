"""
Searching for colorings with a prescribed colorful cycle
========================================================

Backtracking over colorings of K_n with the required cycle pinned to
vertices 0..r-1.  A forbidden cycle whose edges are all colored but one
restricts that last edge, which prunes most of the tree.
"""

import time

from gallaikit import search_coloring, spectrum

for n, forbid, req in [(4, {3}, 4), (6, {5}, 6), (8, {7}, 8), (8, {5}, 8), (9, {5}, 9), (10, {5}, 10)]:
    t0 = time.perf_counter()
    res = search_coloring(n, forbid, req)
    print(f"K{n} forbid={sorted(forbid)} require={req}: {res}  ({time.perf_counter() - t0:.2f}s)")
    if res.witness is not None:
        print("   witness", spectrum(res.witness))

# a tiny budget turns into TIMEOUT rather than a wrong answer
print(search_coloring(9, {5}, 9, budget=3))
