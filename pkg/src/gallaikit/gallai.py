"""Gallai and exact Gallai cliques: recognition, modules and tree decompositions.

A set of vertices ``M`` is a *module* when every vertex outside ``M`` sees
all of ``M`` in a single color.  A partition is homogeneous (every two
blocks joined in one color) exactly when all its blocks are modules, so the
homogeneous-partition machinery below is phrased in terms of modules.

"Nontrivial" is read two ways.  For irreducibility a partition is trivial
when it has one block or only singletons, so a clique is irreducible iff it
has no module ``M`` with ``2 <= |M| <= n - 1``.  For the homogeneous
2-partition of a Gallai clique only the one-block partition is excluded;
an irreducible clique's answer is its all-singleton partition.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .core import ColoredClique, Partition, SimpleGraph


class NotGallaiError(ValueError):
    """The input has a colorful triangle; ``witness`` holds one."""

    def __init__(self, witness):
        super().__init__(f"not a Gallai clique: colorful triangle {witness}")
        self.witness = witness


class TreeError(ValueError):
    """Raised when a :class:`GallaiTree` violates its invariants."""


def find_rainbow_triangle(K: ColoredClique):
    """Lexicographically least triangle with three distinct colors, or None."""
    rows = K.rows
    n = K.n
    for a in range(n):
        ra = rows[a]
        for b in range(a + 1, n):
            cab = ra[b]
            rb = rows[b]
            for c in range(b + 1, n):
                cac = ra[c]
                if cac != cab and rb[c] != cab and rb[c] != cac:
                    return (a, b, c)
    return None


def find_inexact_triangle(K: ColoredClique):
    """Lexicographically least triangle not using exactly two colors, or None."""
    rows = K.rows
    n = K.n
    for a in range(n):
        ra = rows[a]
        for b in range(a + 1, n):
            cab = ra[b]
            rb = rows[b]
            for c in range(b + 1, n):
                if len({cab, ra[c], rb[c]}) != 2:
                    return (a, b, c)
    return None


def is_gallai(K: ColoredClique) -> bool:
    return find_rainbow_triangle(K) is None


def is_exact_gallai(K: ColoredClique) -> bool:
    return find_inexact_triangle(K) is None


def _require_gallai(K):
    w = find_rainbow_triangle(K)
    if w is not None:
        raise NotGallaiError(w)


def _closure(rows, verts, u, v):
    """Smallest module of the subclique on ``verts`` that contains u and v."""
    inside = {u, v}
    outside = [w for w in verts if w not in inside]
    ref = {w: rows[w][u] for w in outside}
    pending = [v]
    while pending:
        z = pending.pop()
        keep = []
        for w in outside:
            if rows[w][z] != ref[w]:
                inside.add(w)
                pending.append(w)
            else:
                keep.append(w)
        outside = keep
    return inside


def smallest_module(K: ColoredClique, u: int, v: int) -> frozenset:
    """Inclusion-minimal module containing ``u`` and ``v``.

    Starting from ``{u, v}``, any outside vertex that sees the current set in
    two colors is pulled in, until every outside vertex is monochromatic
    towards it.
    """
    if u == v:
        raise ValueError("smallest_module needs two distinct vertices")
    return frozenset(_closure(K.rows, range(K.n), u, v))


def is_irreducible(K: ColoredClique) -> bool:
    """True iff no module ``M`` with ``2 <= |M| <= n - 1`` exists."""
    n = K.n
    if n <= 2:
        return True
    verts = range(n)
    return all(len(_closure(K.rows, verts, u, v)) == n for u, v in combinations(verts, 2))


def _components_avoiding(rows, verts, color):
    """Connected components of the edges whose color differs from ``color``."""
    left = set(verts)
    comps = []
    for s in verts:
        if s not in left:
            continue
        left.discard(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            rx = rows[x]
            nxt = [w for w in left if rx[w] != color]
            for w in nxt:
                left.discard(w)
                comp.append(w)
                stack.append(w)
        comps.append(sorted(comp))
    return comps


def _split(rows, verts):
    """Coarsest homogeneous partition with at least two blocks of ``verts``.

    Returns ``(blocks, uniform)``.  When the quotient is uniform in one color
    every union of its blocks is a module; the coarsest choice is the block
    of the smallest vertex against the rest.  Otherwise the quotient is prime
    and its blocks are the maximal proper modules.
    """
    verts = sorted(verts)
    colors = sorted({rows[u][v] for u, v in combinations(verts, 2)})
    for c in colors:
        comps = _components_avoiding(rows, verts, c)
        if len(comps) > 1:
            rest = sorted(x for comp in comps[1:] for x in comp)
            return [comps[0], rest], True
    whole = len(verts)
    blocks = []
    placed = set()
    for x in verts:
        if x in placed:
            continue
        block = {x}
        for y in verts:
            if y != x and y not in block:
                m = _closure(rows, verts, x, y)
                if len(m) < whole:
                    block |= m
        blocks.append(sorted(block))
        placed |= block
    return blocks, False


def homogeneous_2_partition(K: ColoredClique) -> Partition:
    """Coarsest homogeneous partition of a Gallai clique into at least two blocks.

    Its cross colors number at most two.  Raises :class:`NotGallaiError` on
    a colorful triangle.
    """
    if K.n < 2:
        raise ValueError("need at least two vertices")
    _require_gallai(K)
    blocks, _ = _split(K.rows, range(K.n))
    part = Partition(tuple(frozenset(b) for b in blocks), frozenset())
    delta = frozenset(part.cross_colors(K))
    part = Partition(part.blocks, delta)
    if len(delta) > 2 or not part.is_homogeneous(K):
        raise AssertionError("homogeneous 2-partition invariant broken")
    return part


@dataclass
class GallaiTree:
    """Rooted tree with colored sibling pairs whose leaves are clique vertices.

    ``parent[t]`` is the parent of node ``t`` (``None`` for the root),
    ``sibling_colors[(s, t)]`` with ``s < t`` colors each pair of siblings,
    and ``leaf_vertex`` maps leaf nodes onto the vertices ``0..n-1``.
    """

    parent: list
    sibling_colors: dict
    leaf_vertex: dict
    children: list = field(init=False, repr=False)

    def __post_init__(self):
        count = len(self.parent)
        if count == 0:
            raise TreeError("empty tree")
        roots = [t for t, p in enumerate(self.parent) if p is None]
        if len(roots) != 1:
            raise TreeError(f"expected exactly one root, found {len(roots)}")
        self.root = roots[0]
        kids = [[] for _ in range(count)]
        for t, p in enumerate(self.parent):
            if p is None:
                continue
            if not 0 <= p < count or p == t:
                raise TreeError(f"node {t} has invalid parent {p}")
            kids[p].append(t)
        self.children = kids
        depth = self._depths()
        if len(depth) != count:
            raise TreeError("parent links contain a cycle or unreachable node")
        for t, ks in enumerate(kids):
            if len(ks) == 1:
                raise TreeError(f"internal node {t} has a single child")
        leaves = {t for t in range(count) if not kids[t]}
        if set(self.leaf_vertex) != leaves:
            raise TreeError("leaf lines must cover exactly the leaves")
        if sorted(self.leaf_vertex.values()) != list(range(len(leaves))):
            raise TreeError("leaf vertices must be a bijection onto 0..n-1")
        expected = {(a, b) for ks in kids for a, b in combinations(sorted(ks), 2)}
        if set(self.sibling_colors) != expected:
            raise TreeError("sibling colors must cover exactly the sibling pairs")
        for t, ks in enumerate(kids):
            if len(self.factor_colors(t)) > 2:
                raise TreeError(f"factor at node {t} uses more than two colors")

    def _depths(self):
        depth = {self.root: 0}
        stack = [self.root]
        while stack:
            t = stack.pop()
            for s in self.children[t]:
                if s in depth:
                    break
                depth[s] = depth[t] + 1
                stack.append(s)
        return depth

    @property
    def n(self) -> int:
        return len(self.leaf_vertex)

    def internal_nodes(self) -> list[int]:
        return [t for t, ks in enumerate(self.children) if ks]

    def sibling_color(self, s: int, t: int) -> int:
        return self.sibling_colors[(s, t) if s < t else (t, s)]

    def factor_colors(self, t: int) -> set:
        ks = sorted(self.children[t])
        return {self.sibling_colors[p] for p in combinations(ks, 2)}

    def factor(self, t: int) -> tuple[ColoredClique, list[int]]:
        """The factor at ``t`` as a colored clique on its children (sorted by id).

        Colors are re-tightened; use :meth:`sibling_color` for original ids.
        """
        ks = sorted(self.children[t])
        mat = np.full((len(ks), len(ks)), -1, dtype=np.int64)
        for i, j in combinations(range(len(ks)), 2):
            mat[i, j] = mat[j, i] = self.sibling_colors[(ks[i], ks[j])]
        return ColoredClique.tightened(mat), ks

    def ancestors(self, t: int) -> list[int]:
        out = []
        while self.parent[t] is not None:
            t = self.parent[t]
            out.append(t)
        return out

    def height(self) -> int:
        return max(self._depths().values())


def recompose(T: GallaiTree) -> ColoredClique:
    """Color each leaf pair by the sibling pair just below their lowest common ancestor."""
    n = T.n
    paths = {}
    for leaf, v in T.leaf_vertex.items():
        chain = [leaf] + T.ancestors(leaf)
        paths[v] = chain[::-1]
    mat = np.full((n, n), -1, dtype=np.int64)
    for u, v in combinations(range(n), 2):
        pu, pv = paths[u], paths[v]
        i = 0
        while pu[i] == pv[i]:
            i += 1
        mat[u, v] = mat[v, u] = T.sibling_color(pu[i], pv[i])
    if n == 1:
        return ColoredClique(mat, 0)
    return ColoredClique.tightened(mat)


def decompose(K: ColoredClique) -> GallaiTree:
    """Tree 2-clique decomposition with irreducible factors.

    Each node splits its vertex set by :func:`homogeneous_2_partition`;
    uniform quotients are split two ways at a time, so every factor is
    irreducible.  Node ids follow preorder with the root at 0.
    """
    _require_gallai(K)
    rows = K.rows
    parent: list = []
    sibs: dict = {}
    leaves: dict = {}

    def build(verts, par):
        me = len(parent)
        parent.append(par)
        if len(verts) == 1:
            leaves[me] = verts[0]
            return me
        blocks, _ = _split(rows, verts)
        kids = [(build(b, me), b[0]) for b in blocks]
        for (s, a), (t, b) in combinations(kids, 2):
            sibs[(s, t)] = rows[a][b]
        return me

    build(list(range(K.n)), None)
    return GallaiTree(parent, sibs, leaves)


def _is_path_on_four(G: SimpleGraph) -> bool:
    return len(G.edges) == 3 and G.is_connected() and sorted(G.degrees()) == [1, 1, 2, 2]


def _is_five_cycle(G: SimpleGraph) -> bool:
    return len(G.edges) == 5 and G.is_connected() and G.degrees() == [2] * 5


def color_class(K: ColoredClique, c: int) -> SimpleGraph:
    return SimpleGraph(K.n, [(u, v) for u, v, x in K.edges() if x == c])


def is_simple_pattern(K: ColoredClique) -> bool:
    """Size 2; size 4 with both color classes paths; size 5 with both color classes 5-cycles."""
    if K.n == 2:
        return True
    if K.n == 4 and K.k == 2:
        return all(_is_path_on_four(color_class(K, c)) for c in range(2))
    if K.n == 5 and K.k == 2:
        return all(_is_five_cycle(color_class(K, c)) for c in range(2))
    return False


def verify_exact_structure(K: ColoredClique) -> bool:
    """Structural exactness test.

    True iff the decomposition has only simple factors and no color repeats
    between a factor and any factor above it.
    """
    try:
        T = decompose(K)
    except NotGallaiError:
        return False
    for t in T.internal_nodes():
        fac, _ = T.factor(t)
        if not is_simple_pattern(fac):
            return False
        mine = T.factor_colors(t)
        if any(mine & T.factor_colors(a) for a in T.ancestors(t)):
            return False
    return True


def max_exact_gallai_order(k: int) -> int:
    """Largest vertex count of an exact Gallai clique on ``k`` colors."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k % 2 == 0:
        return 5 ** (k // 2)
    return 2 * 5 ** ((k - 1) // 2)


@dataclass(frozen=True)
class Theorem4Report:
    """Outcome of the subset inequalities.

    ``disjoint_ok``: ``|colors(b,c) - colors(b,b)| <= |c|`` for disjoint b, c.
    ``subset_ok``: ``|colors(b,b)| <= |b| - 1`` for every b.
    Witnesses are sorted vertex tuples (``disjoint_witness`` is ``(b, c)``).
    """

    disjoint_ok: bool
    subset_ok: bool
    disjoint_witness: tuple | None
    subset_witness: tuple | None
    exhaustive: bool
    subsets_checked: int

    @property
    def ok(self) -> bool:
        return self.disjoint_ok and self.subset_ok


def _bits(mask: int) -> tuple:
    return tuple(i for i in range(mask.bit_length()) if (mask >> i) & 1)


def _subset_tables(K: ColoredClique):
    """Color bitmasks indexed by vertex subsets (as integer masks).

    ``to[v][b]`` is the set of colors from ``v`` into ``b`` and ``inner[b]``
    the set of colors inside ``b``.  Returns numpy uint64 arrays when the
    palette fits in 64 bits, plain lists of ints otherwise.
    """
    n, rows = K.n, K.rows
    size = 1 << n
    wide = K.k > 64
    if wide:
        to = [[0] * size for _ in range(n)]
        inner = [0] * size
    else:
        to = np.zeros((n, size), dtype=np.uint64)
        inner = np.zeros(size, dtype=np.uint64)
    for v in range(n):
        row = to[v]
        for j in range(n):
            lo = 1 << j
            add = 0 if j == v else 1 << rows[v][j]
            if wide:
                row[lo : 2 * lo] = [x | add for x in row[:lo]]
            else:
                row[lo : 2 * lo] = row[:lo] | np.uint64(add)
    for j in range(n):
        lo = 1 << j
        if wide:
            inner[lo : 2 * lo] = [a | b for a, b in zip(inner[:lo], to[j][:lo])]
        else:
            inner[lo : 2 * lo] = inner[:lo] | to[j][:lo]
    return to, inner


def _theorem4_exhaustive(K: ColoredClique) -> Theorem4Report:
    # Over all disjoint (b, c) the first inequality reduces to singleton c:
    # colors(b,c) - colors(b,b) is the union over v in c of
    # colors(v,b) - colors(b,b), so it fits in |c| for every c iff each term
    # has at most one color.
    n = K.n
    size = 1 << n
    to, inner = _subset_tables(K)
    masks = np.arange(size, dtype=np.uint64)
    card = np.bitwise_count(masks).astype(np.int64)
    if isinstance(inner, np.ndarray):
        inner_pc = np.bitwise_count(inner).astype(np.int64)
    else:
        inner_pc = np.array([x.bit_count() for x in inner], dtype=np.int64)
    bad7 = np.nonzero((card > 0) & (inner_pc > card - 1))[0]
    subset_witness = _bits(int(bad7[0])) if bad7.size else None

    best = None
    for v in range(n):
        if isinstance(inner, np.ndarray):
            extra = to[v] & ~inner
            multi = (extra & (extra - np.uint64(1))) != 0
        else:
            multi = np.array([bool((a & ~b) & ((a & ~b) - 1)) for a, b in zip(to[v], inner)])
        outside = ((masks >> np.uint64(v)) & np.uint64(1)) == 0
        hits = np.nonzero(multi & outside & (card > 0))[0]
        if hits.size:
            cand = (int(hits[0]), v)
            if best is None or cand < best:
                best = cand
    disjoint_witness = (_bits(best[0]), (best[1],)) if best is not None else None
    return Theorem4Report(
        disjoint_witness is None, subset_witness is None, disjoint_witness, subset_witness, True, size - 1
    )


def _theorem4_sampled(K: ColoredClique, seed: int, samples: int) -> Theorem4Report:
    n = K.n
    rows = K.rows
    rng = random.Random(seed)
    subsets = [c for r in range(1, min(5, n) + 1) for c in combinations(range(n), r)]
    for _ in range(samples):
        r = rng.randint(6, n)
        subsets.append(tuple(sorted(rng.sample(range(n), r))))
    subset_witness = None
    disjoint_witness = None
    for b in subsets:
        bs = set(b)
        inner = {rows[u][v] for u, v in combinations(b, 2)}
        if subset_witness is None and len(inner) > len(b) - 1:
            subset_witness = b
        if disjoint_witness is None:
            for v in range(n):
                if v in bs:
                    continue
                if len({rows[v][u] for u in b} - inner) > 1:
                    disjoint_witness = (b, (v,))
                    break
        if subset_witness is not None and disjoint_witness is not None:
            break
    return Theorem4Report(
        disjoint_witness is None, subset_witness is None, disjoint_witness, subset_witness, False, len(subsets)
    )


def check_theorem4(K: ColoredClique, subset_budget: int = 15, seed: int = 0, samples: int = 10_000) -> Theorem4Report:
    """Evaluate the two subset inequalities that characterize Gallai cliques.

    All subsets are examined when ``K.n <= subset_budget``; larger cliques
    use every subset of size at most 5 plus ``samples`` random larger ones
    drawn with ``seed``.  A failure certifies that ``K`` is not Gallai.
    """
    if K.n <= subset_budget:
        return _theorem4_exhaustive(K)
    return _theorem4_sampled(K, seed, samples)
