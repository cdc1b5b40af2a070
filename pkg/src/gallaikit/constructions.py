"""Explicit colorings and named graphs, plus seeded random generators."""

from __future__ import annotations

import random
from itertools import combinations

import numpy as np

from .core import ColoredClique, SimpleGraph
from .gallai import GallaiTree, recompose


def odd_gon_index_map(m: int) -> dict[int, int]:
    """Internal vertex id -> signed index ``i`` in ``-k..k`` (``m = 2k + 1``)."""
    k = (m - 1) // 2
    return {x: x - k for x in range(m)}


def odd_gon_no_squares(m: int) -> ColoredClique:
    """Colorful ``m``-gon with no colorful square, for odd ``m >= 3``.

    Vertex ``x`` stands for signed index ``i = x - k``.  Same-parity pairs
    share one color; a mixed-parity pair takes the color owned by its index
    of larger absolute value.  Color 0 is the shared color, then one color
    per nonzero index in increasing order.
    """
    if m < 3 or m % 2 == 0:
        raise ValueError("m must be an odd integer >= 3")
    k = (m - 1) // 2
    own = {i: j for j, i in enumerate([i for i in range(-k, k + 1) if i != 0], start=1)}
    mat = np.full((m, m), -1, dtype=np.int64)
    for x, y in combinations(range(m), 2):
        i, j = x - k, y - k
        if (i - j) % 2 == 0:
            c = 0
        else:
            c = own[i] if abs(i) > abs(j) else own[j]
        mat[x, y] = mat[y, x] = c
    return ColoredClique(mat, m)


def even_gon_no_preceding(m: int) -> ColoredClique:
    """Colorful ``2m``-gon without colorful ``(2m-1)``-gons, for ``m >= 3``.

    Perimeter edge ``(j, j+1)`` gets color ``j``.  Vertices 0, 1, 2, 3 play
    the four consecutive special vertices: chord ``(0, 2)`` repeats color 2,
    chord ``(1, 3)`` repeats color 0, and every other chord repeats color 1.
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    n = 2 * m
    mat = np.full((n, n), -1, dtype=np.int64)
    for x, y in combinations(range(n), 2):
        if y == x + 1:
            c = x
        elif (x, y) == (0, n - 1):
            c = n - 1
        elif (x, y) == (0, 2):
            c = 2
        elif (x, y) == (1, 3):
            c = 0
        else:
            c = 1
        mat[x, y] = mat[y, x] = c
    return ColoredClique(mat, n)


# Color-0 edges of the simple cliques; every other edge gets color 1.
_SIMPLE_PATTERNS = {
    2: [(0, 1)],
    4: [(0, 1), (1, 2), (2, 3)],
    5: [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
}


def simple_clique(size: int) -> ColoredClique:
    """The irreducible exact Gallai building blocks on 2, 4 or 5 vertices."""
    if size not in _SIMPLE_PATTERNS:
        raise ValueError("simple cliques have 2, 4 or 5 vertices")
    zero = set(_SIMPLE_PATTERNS[size])
    return ColoredClique.from_function(size, lambda u, v: 0 if (u, v) in zero else 1)


def _blow_up(levels) -> ColoredClique:
    """Nest simple factors; ``levels`` lists ``(size, color_offset)`` from the root down.

    Vertex ids read as mixed-radix digits (root digit most significant); a
    pair is colored by the simple pattern at the first level where its
    digits differ.
    """
    sizes = [s for s, _ in levels]
    pats = [simple_clique(s).rows for s in sizes]
    n = int(np.prod(sizes))
    digits = []
    for x in range(n):
        ds = []
        for s in reversed(sizes):
            ds.append(x % s)
            x //= s
        digits.append(ds[::-1])
    mat = np.full((n, n), -1, dtype=np.int64)
    for x, y in combinations(range(n), 2):
        dx, dy = digits[x], digits[y]
        lvl = next(i for i in range(len(sizes)) if dx[i] != dy[i])
        c = levels[lvl][1] + pats[lvl][dx[lvl]][dy[lvl]]
        mat[x, y] = mat[y, x] = c
    return ColoredClique.tightened(mat)


def extremal_exact_gallai(k: int) -> ColoredClique:
    """Exact Gallai clique with ``k`` colors and the maximum possible order.

    ``k // 2`` nested 5-vertex factors, topped by one 2-vertex factor when
    ``k`` is odd; every level has its own colors.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    levels = []
    offset = 0
    if k % 2:
        levels.append((2, 0))
        offset = 1
    for _ in range(k // 2):
        levels.append((5, offset))
        offset += 2
    return _blow_up(levels)


def gallai_host(H: SimpleGraph) -> ColoredClique:
    """Two-colored clique whose color-0 class is exactly the connected graph ``H``."""
    if H.n < 2:
        raise ValueError("host graph needs at least two vertices")
    if not H.is_connected():
        raise ValueError("host graph must be connected")
    mat = np.ones((H.n, H.n), dtype=np.int64)
    for u, v in H.edges:
        mat[u, v] = mat[v, u] = 0
    complete = len(H.edges) == H.n * (H.n - 1) // 2
    return ColoredClique(mat, 1 if complete else 2)


def path_graph(k: int) -> SimpleGraph:
    """``P_k``: ``k + 1`` vertices and ``k`` edges."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return SimpleGraph(k + 1, [(i, i + 1) for i in range(k)])


def cycle_graph(k: int) -> SimpleGraph:
    """``C_k`` on vertices ``0..k-1``."""
    if k < 3:
        raise ValueError("k must be >= 3")
    return SimpleGraph(k, [(i, (i + 1) % k) for i in range(k)])


def graph_a() -> SimpleGraph:
    """Six vertices: a square 1-2-3-4 with pendant edges 0-1 and 4-5."""
    return SimpleGraph(6, [(0, 1), (1, 2), (1, 4), (2, 3), (3, 4), (4, 5)])


def named_graph(name: str, param: int | None = None) -> SimpleGraph:
    """``named_graph("P", k)``, ``named_graph("C", k)`` or ``named_graph("A")``.

    Compact spellings such as ``"P3"`` or ``"C5"`` are accepted too.
    """
    key = name.strip().upper()
    if key == "A":
        return graph_a()
    if len(key) > 1 and key[1:].isdigit():
        key, param = key[0], int(key[1:])
    if param is None:
        raise ValueError(f"{name} needs a size parameter")
    if key == "P":
        if param < 1:
            raise ValueError("P_k needs k >= 1")
        return path_graph(param)
    if key == "C":
        return cycle_graph(param)
    raise ValueError(f"unknown graph name {name!r}")


def _random_groups(rng: random.Random, items: list, parts: int) -> list[list]:
    items = items[:]
    rng.shuffle(items)
    cuts = sorted(rng.sample(range(1, len(items)), parts - 1))
    bounds = [0] + cuts + [len(items)]
    return [sorted(items[a:b]) for a, b in zip(bounds, bounds[1:])]


def _tree_from_plan(n: int, plan) -> GallaiTree:
    """Assemble a :class:`GallaiTree` from a recursive ``plan``.

    ``plan`` is either a vertex id or ``(children_plans, color_fn)`` where
    ``color_fn(i, j)`` colors the sibling pair of children ``i < j``.
    """
    parent: list = []
    sibs: dict = {}
    leaves: dict = {}

    def build(node, par):
        me = len(parent)
        parent.append(par)
        if isinstance(node, int):
            leaves[me] = node
            return me
        kids, color = node
        ids = [build(k, me) for k in kids]
        for i, j in combinations(range(len(ids)), 2):
            sibs[(ids[i], ids[j])] = color(i, j)
        return me

    build(plan, None)
    return GallaiTree(parent, sibs, leaves)


def random_tree_2_clique(rng: random.Random, n: int, max_factor: int = 6, palette: int = 6) -> ColoredClique:
    """Random tree 2-clique on ``n`` vertices.

    Each internal node gets 2..``max_factor`` children and colors its sibling
    pairs from at most two colors drawn out of ``palette``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")

    def plan(verts):
        if len(verts) == 1:
            return verts[0]
        parts = rng.randint(2, min(max_factor, len(verts)))
        groups = _random_groups(rng, verts, parts)
        two = rng.sample(range(palette), 2)
        table = {p: rng.choice(two) for p in combinations(range(parts), 2)}
        return [plan(g) for g in groups], lambda i, j, t=table: t[(i, j)]

    if n == 1:
        return ColoredClique(np.full((1, 1), -1), 0)
    return recompose(_tree_from_plan(n, plan(list(range(n)))))


def random_exact_gallai(rng: random.Random, n: int, palette: int = 12) -> ColoredClique:
    """Random exact Gallai clique on ``n`` vertices, built from simple factors.

    Factor sizes come from {2, 4, 5}, children get shuffled, and a factor
    avoids every color used by the factors above it.
    """
    if n < 1:
        raise ValueError("n must be >= 1")

    def plan(verts, banned):
        if len(verts) == 1:
            return verts[0]
        sizes = [s for s in (2, 4, 5) if s <= len(verts)]
        size = rng.choice(sizes)
        free = [c for c in range(palette + 2 * len(banned)) if c not in banned]
        colors = rng.sample(free, 1 if size == 2 else 2)
        groups = _random_groups(rng, verts, size)
        pat = simple_clique(size).rows
        order = list(range(size))
        rng.shuffle(order)
        kids = [plan(g, banned | set(colors)) for g in groups]
        return kids, lambda i, j: colors[pat[order[i]][order[j]]]

    if n == 1:
        return ColoredClique(np.full((1, 1), -1), 0)
    return recompose(_tree_from_plan(n, plan(list(range(n)), frozenset())))


def random_connected_graph(rng: random.Random, n: int, p: float = 0.3) -> SimpleGraph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return SimpleGraph(n, edges)


def random_coloring(rng: random.Random, n: int, colors: int) -> ColoredClique:
    """Uniform random coloring of ``K_n`` from ``colors`` colors (palette re-tightened)."""
    mat = np.full((n, n), -1, dtype=np.int64)
    for u, v in combinations(range(n), 2):
        mat[u, v] = mat[v, u] = rng.randrange(colors)
    if n == 1:
        return ColoredClique(mat, 0)
    return ColoredClique.tightened(mat)
