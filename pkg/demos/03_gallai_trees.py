"""
Gallai colorings as trees of small factors
==========================================

A coloring without colorful triangles splits into homogeneous blocks, and
recursively into a tree whose factors use at most two colors.  Exact
colorings (every triangle exactly two colors) only use the simple factors
on 2, 4 and 5 vertices.
"""

import random

from gallaikit import check_theorem4, decompose, extremal_exact_gallai, homogeneous_2_partition, is_exact_gallai, recompose, simple_clique
from gallaikit.constructions import random_tree_2_clique
from gallaikit.io import dumps_gt

K = simple_clique(5)
print(K.color)
print("exact:", is_exact_gallai(K))

K = extremal_exact_gallai(3)
print(K.n, "vertices,", K.k, "colors")
T = decompose(K)
print(dumps_gt(T))
for t in T.internal_nodes():
    fac, kids = T.factor(t)
    print("factor at", t, "size", fac.n, "colors", sorted(T.factor_colors(t)))
print("roundtrip:", recompose(T) == K)

# largest orders of exact colorings with k colors
print([extremal_exact_gallai(k).n for k in range(1, 6)])

rng = random.Random(0)
K = random_tree_2_clique(rng, 10)
P = homogeneous_2_partition(K)
print("blocks", [sorted(b) for b in P.blocks], "cross colors", sorted(P.delta))
print(check_theorem4(K))
