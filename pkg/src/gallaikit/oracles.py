"""Slow, direct reference implementations used to cross-check the fast paths."""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np

from .core import ColoredClique, SimpleGraph


def naive_colorful_lengths(K: ColoredClique) -> set[int]:
    """Lengths ``L >= 3`` having a colorful ``L``-cycle, by trying every vertex ordering."""
    rows = K.rows
    out = set()
    for L in range(3, K.n + 1):
        for subset in combinations(range(K.n), L):
            for rest in permutations(subset[1:]):
                cyc = (subset[0],) + rest
                if len({rows[cyc[i - 1]][cyc[i]] for i in range(L)}) == L:
                    out.add(L)
                    break
            if L in out:
                break
    return out


def restricted_growth_colorings(n: int):
    """Every coloring of ``K_n`` up to renaming colors, as tight ColoredCliques.

    Edges are taken in lexicographic order and a new color id may only be
    one more than the largest id so far.  There are Bell(n(n-1)/2) of them.
    """
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    word = [0] * m

    def rec(i, top):
        if i == m:
            mat = np.full((n, n), -1, dtype=np.int64)
            for (u, v), c in zip(pairs, word):
                mat[u, v] = mat[v, u] = c
            yield ColoredClique(mat, top + 1 if m else 0)
            return
        for c in range(top + 2):
            word[i] = c
            yield from rec(i + 1, max(top, c))

    if m == 0:
        yield ColoredClique(np.full((n, n), -1, dtype=np.int64), 0)
        return
    word[0] = 0
    yield from rec(1, 0)


def two_colorings(n: int):
    """All ``2 ** (n(n-1)/2)`` maps of the edges of ``K_n`` into {0, 1}, as color matrices."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        mat = [[-1] * n for _ in range(n)]
        for i, (u, v) in enumerate(pairs):
            c = (bits >> i) & 1
            mat[u][v] = mat[v][u] = c
        yield mat


def literal_theorem4(K: ColoredClique):
    """Both subset inequalities over every subset and every disjoint pair (``3 ** n`` pairs).

    Returns ``(disjoint_ok, subset_ok)``.
    """
    rows = K.rows
    n = K.n

    def inner(b):
        return {rows[u][v] for u, v in combinations(b, 2)}

    subset_ok = True
    disjoint_ok = True
    for assign in np.ndindex(*([3] * n)):
        b = [v for v in range(n) if assign[v] == 1]
        c = [v for v in range(n) if assign[v] == 2]
        if not b:
            continue
        bb = inner(b)
        if not c and len(bb) > len(b) - 1:
            subset_ok = False
        if c:
            bc = {rows[u][v] for u in b for v in c}
            if len(bc - bb) > len(c):
                disjoint_ok = False
    return disjoint_ok, subset_ok


def enumerate_full_homs(G, H):
    """Yield every full homomorphism ``G -> H`` as a tuple, by exhaustive backtracking."""
    m: list[int] = []

    def extend():
        i = len(m)
        if i == G.n:
            yield tuple(m)
            return
        for w in range(H.n):
            if all(G.has_edge(j, i) == H.has_edge(m[j], w) for j in range(i)):
                m.append(w)
                yield from extend()
                m.pop()

    yield from extend()


def atlas_graphs(max_n: int, connected: bool = True):
    """Non-isomorphic graphs on 1..``max_n`` vertices (``max_n <= 7``) from the networkx atlas."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        if connected and not nx.is_connected(g):
            continue
        yield SimpleGraph(n, g.edges())



def plain_search(n: int, forbidden, required: int) -> bool:
    """Whether some coloring of ``K_n`` has a colorful ``required``-cycle and no forbidden one.

    No propagation or clever ordering: the required cycle sits on
    ``0..required-1`` with colors ``0..required-1`` and the other edges are
    filled in lexicographic order with restricted-growth colors.  After each
    assignment every colored path closing a forbidden cycle through the new
    edge is listed naively and checked for distinct colors.
    """
    forbidden = sorted(set(forbidden))
    mat = [[-1] * n for _ in range(n)]
    for i in range(required):
        u, v = i, (i + 1) % required
        mat[u][v] = mat[v][u] = i
    todo = [(u, v) for u, v in combinations(range(n), 2) if mat[u][v] < 0]

    def closes_forbidden(u, v):
        # colored paths v -> ... -> u with distinct colors, plus the edge (u, v)
        def walk(path, seen_colors, length):
            x = path[-1]
            if len(path) == length:
                return x == u
            for y in range(n):
                c = mat[x][y]
                if y == x or c < 0 or c in seen_colors:
                    continue
                if y == u and len(path) + 1 != length:
                    continue
                if y in path:
                    continue
                if walk(path + [y], seen_colors | {c}, length):
                    return True
            return False

        return any(walk([v], {mat[u][v]}, L) for L in forbidden)

    if any(closes_forbidden(i, (i + 1) % required) for i in range(required)):
        return False

    def rec(i, top):
        if i == len(todo):
            return True
        u, v = todo[i]
        for c in range(top + 2):
            mat[u][v] = mat[v][u] = c
            if not closes_forbidden(u, v) and rec(i + 1, max(top, c)):
                return True
        mat[u][v] = mat[v][u] = -1
        return False

    return rec(0, required - 1)
