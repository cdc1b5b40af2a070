"""
Monochromes and full homomorphisms into C5
==========================================

A monochrome is a connected piece of one color class.  In an exact Gallai
coloring every monochrome reduces to P1, P3 or C5, and a connected graph is
of that kind exactly when it has a full homomorphism into C5; otherwise it
contains an induced C3, P4 or the six-vertex graph A.
"""

import random

from gallaikit import classify_monochrome, gallai_host, monochromes, named_graph, reduced_form, spanning_monochrome, type_name
from gallaikit.constructions import random_connected_graph, random_exact_gallai

for name in ["P3", "C5", "A", "C3", "P4"]:
    G = named_graph(name)
    print(f"{name:3s} type={type_name(G):3s}", classify_monochrome(G))

# merging equal neighborhoods
G = named_graph("P2")
red = reduced_form(G)
print("P2 reduces to", red.graph, "via", red.r)

# every monochrome of a random exact coloring
rng = random.Random(1)
K = random_exact_gallai(rng, 30)
print(sorted({type_name(m.graph) for m in monochromes(K)}))

# any connected graph is the spanning monochrome of some Gallai coloring
H = random_connected_graph(rng, 9, p=0.2)
K = gallai_host(H)
m = spanning_monochrome(K)
print("host color", m.color, "spans", len(m.vertices), "vertices; same graph:", m.graph == H)
