"""Value types for edge-colored complete graphs and plain graphs.

Colors are dense integer ids ``0..k-1``.  A :class:`ColoredClique` is always
complete and its palette is always tight: every id below ``k`` is used by
some edge once ``n >= 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np


class ColoringError(ValueError):
    """Raised when a color matrix violates a colored-clique invariant."""


def _check_matrix(color: np.ndarray, k: int) -> None:
    if color.ndim != 2 or color.shape[0] != color.shape[1]:
        raise ColoringError("color matrix must be square")
    n = color.shape[0]
    if n < 1:
        raise ColoringError("a colored clique needs at least one vertex")
    if k < 0 or (k == 0 and n > 1):
        raise ColoringError(f"palette size {k} is invalid for n={n}")
    used = set()
    for u, v in combinations(range(n), 2):
        c = int(color[u, v])
        if c != color[v, u]:
            raise ColoringError(f"asymmetric entry at ({u},{v})")
        if c < 0:
            raise ColoringError(f"missing edge color at ({u},{v})")
        if c >= k:
            raise ColoringError(f"color id {c} out of range at ({u},{v})")
        used.add(c)
    if n > 1 and len(used) != k:
        missing = sorted(set(range(k)) - used)
        raise ColoringError(f"unused color {missing[0]}")


class ColoredClique:
    """A complete graph on ``n`` vertices with a symmetric edge coloring.

    ``color[u][v]`` holds the color of edge ``uv``; the diagonal is ``-1``.
    Instances are immutable.
    """

    __slots__ = ("n", "k", "color", "rows")

    def __init__(self, color, k: int | None = None):
        arr = np.array(color, dtype=np.int64)
        if arr.ndim == 2 and arr.shape[0] == arr.shape[1]:
            np.fill_diagonal(arr, -1)
        if k is None:
            k = int(arr.max()) + 1 if arr.size > 1 else 0
        _check_matrix(arr, k)
        arr.setflags(write=False)
        self.n = int(arr.shape[0])
        self.k = int(k)
        self.color = arr
        # plain nested lists are much faster than numpy indexing in hot loops
        self.rows = arr.tolist()

    @classmethod
    def from_function(cls, n: int, fn) -> "ColoredClique":
        """Build from ``fn(u, v)`` for ``u < v``, relabelling colors densely.

        ``fn`` may return any hashable labels; ids are assigned in the order
        the labels are first met when scanning edges lexicographically.
        """
        ids: dict = {}
        mat = np.full((n, n), -1, dtype=np.int64)
        for u, v in combinations(range(n), 2):
            c = ids.setdefault(fn(u, v), len(ids))
            mat[u, v] = mat[v, u] = c
        return cls(mat, len(ids))

    @classmethod
    def tightened(cls, color) -> "ColoredClique":
        """Build from a matrix whose color ids may be sparse.

        Ids are renumbered preserving their order, so an already tight
        matrix is left unchanged.
        """
        arr = np.array(color, dtype=np.int64)
        n = arr.shape[0]
        iu = np.triu_indices(n, 1)
        present = np.unique(arr[iu])
        lookup = {int(c): i for i, c in enumerate(present)}
        out = np.full((n, n), -1, dtype=np.int64)
        for u, v in zip(*iu):
            out[u, v] = out[v, u] = lookup[int(arr[u, v])]
        return cls(out, len(present))

    @classmethod
    def monochromatic(cls, n: int) -> "ColoredClique":
        return cls.from_function(n, lambda u, v: 0)

    @classmethod
    def rainbow(cls, n: int) -> "ColoredClique":
        return cls.from_function(n, lambda u, v: (u, v))

    def __call__(self, u: int, v: int) -> int:
        return self.rows[u][v]

    def edges(self):
        """Yield ``(u, v, color)`` for ``u < v`` in lexicographic order."""
        rows = self.rows
        for u, v in combinations(range(self.n), 2):
            yield u, v, rows[u][v]

    def __eq__(self, other):
        if not isinstance(other, ColoredClique):
            return NotImplemented
        return self.k == other.k and np.array_equal(self.color, other.color)

    def __hash__(self):
        return hash((self.k, self.color.tobytes()))

    def __repr__(self):
        return f"ColoredClique(n={self.n}, k={self.k})"


def validate(K: ColoredClique) -> None:
    """Re-check every invariant of ``K``; raise :class:`ColoringError` on the first violation."""
    _check_matrix(np.asarray(K.color), K.k)


def _as_set(s, n: int) -> frozenset:
    s = frozenset(int(x) for x in s)
    if not s:
        raise ValueError("vertex set must be nonempty")
    if min(s) < 0 or max(s) >= n:
        raise ValueError("vertex out of range")
    return s


def colors_between(K: ColoredClique, a: Iterable[int], b: Iterable[int]) -> set[int]:
    """Colors of the edges joining ``a`` to ``b`` (loops ignored)."""
    a = _as_set(a, K.n)
    b = _as_set(b, K.n)
    rows = K.rows
    return {rows[u][v] for u in a for v in b if u != v}


@dataclass(frozen=True)
class Cycle:
    """A cycle of at least three distinct vertices.

    Two cycles are equal when they agree up to rotation and reversal;
    ``vertices`` always holds the lexicographically least representative.
    """

    vertices: tuple[int, ...]

    def __init__(self, vertices: Sequence[int]):
        vs = tuple(int(v) for v in vertices)
        if len(vs) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise ValueError("cycle vertices must be distinct")
        object.__setattr__(self, "vertices", canonical_cycle(vs))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def canonical_cycle(vs: Sequence[int]) -> tuple[int, ...]:
    n = len(vs)
    i = min(range(n), key=vs.__getitem__)
    fwd = tuple(vs[(i + j) % n] for j in range(n))
    bwd = tuple(vs[(i - j) % n] for j in range(n))
    return min(fwd, bwd)


def is_colorful(K: ColoredClique, cycle) -> bool:
    """True iff consecutive edges of ``cycle`` carry pairwise distinct colors."""
    vs = list(cycle)
    if len(vs) < 3:
        # a 2-cycle traverses the same edge twice
        return False
    if len(set(vs)) != len(vs) or min(vs) < 0 or max(vs) >= K.n:
        raise ValueError("cycle must consist of distinct vertices of K")
    rows = K.rows
    seen = {rows[vs[i - 1]][vs[i]] for i in range(len(vs))}
    return len(seen) == len(vs)


def induced_subclique(K: ColoredClique, s: Iterable[int]) -> tuple[ColoredClique, dict[int, int]]:
    """Restrict ``K`` to ``s`` and re-tighten the palette.

    Returns the subclique together with the map from original vertex ids to
    the new ids ``0..len(s)-1`` (assigned in increasing order).  Color ids
    keep their relative order.
    """
    verts = sorted(_as_set(s, K.n))
    sub = K.color[np.ix_(verts, verts)]
    return ColoredClique.tightened(sub), {v: i for i, v in enumerate(verts)}


class SimpleGraph:
    """A finite undirected loopless graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        es = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            es.add((min(u, v), max(u, v)))
        self.n = n
        self.edges = frozenset(es)
        adj = [set() for _ in range(n)]
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        self.adj = tuple(frozenset(a) for a in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def induced(self, verts: Sequence[int]) -> "SimpleGraph":
        """Induced subgraph on ``verts``, relabelled by position in ``verts``."""
        pos = {v: i for i, v in enumerate(verts)}
        return SimpleGraph(len(verts), [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos])

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class Partition:
    """Disjoint vertex blocks covering ``0..n-1`` plus a cross-color budget."""

    blocks: tuple[frozenset, ...]
    delta: frozenset

    def __post_init__(self):
        seen: set = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if seen & b:
                raise ValueError("blocks overlap")
            seen |= b
        if seen != set(range(len(seen))):
            raise ValueError("blocks must cover 0..n-1")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_of(self) -> dict[int, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}

    def cross_colors(self, K: ColoredClique) -> set[int]:
        where = self.block_of()
        return {c for u, v, c in K.edges() if where[u] != where[v]}

    def is_valid_for(self, K: ColoredClique) -> bool:
        """Delta-validity: every edge between distinct blocks is colored in ``delta``."""
        return self.n == K.n and self.cross_colors(K) <= self.delta

    def is_homogeneous(self, K: ColoredClique) -> bool:
        """Every pair of distinct blocks is joined by edges of a single color."""
        for a, b in combinations(self.blocks, 2):
            if len(colors_between(K, a, b)) != 1:
                return False
        return True
