"""Exhaustive search for colorings with a prescribed colorful cycle.

``search_coloring(n, forbidden, required)`` looks for a coloring of ``K_n``
that has a colorful ``required``-cycle but no colorful ``f``-cycle for any
``f`` in ``forbidden``.

Symmetry is broken in two ways.  The required cycle is pinned to vertices
``0..r-1`` with edge ``(i, i+1)`` colored ``i``, which is without loss of
generality.  Colors are canonical up to renaming: at any node of the search
all colors not yet used are interchangeable, so an edge is only ever offered
the used colors plus a single fresh one.

Every forbidden cycle is a constraint "not all edge colors distinct".  When
all but one edge of such a cycle are colored with distinct colors, the last
edge must repeat one of them; that restriction is propagated eagerly, and a
domain shrinking to one color forces an assignment.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, permutations

from .core import ColoredClique


class Status(str, enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    TIMEOUT = "TIMEOUT"


@dataclass(frozen=True)
class SearchResult:
    status: Status
    nodes: int
    witness: ColoredClique | None = None

    def __str__(self):
        return f"{self.status.value} nodes={self.nodes}"


class _Conflict(Exception):
    pass


def _cycles_of_length(n: int, length: int):
    """Every undirected ``length``-cycle of ``K_n`` exactly once."""
    for s in range(n):
        rest = range(s + 1, n)
        for body in permutations(rest, length - 1):
            if body[0] < body[-1]:
                yield (s,) + body


def _popcount(x: int) -> int:
    return bin(x).count("1")


class _Search:
    def __init__(self, n, forbidden, required, budget):
        self.n = n
        self.budget = budget
        self.nodes = 0
        self.pairs = list(combinations(range(n), 2))
        eid = {p: i for i, p in enumerate(self.pairs)}
        self.eid = eid

        def edge(u, v):
            return eid[(u, v) if u < v else (v, u)]

        cycles = []
        for f in sorted(forbidden):
            for cyc in _cycles_of_length(n, f):
                cycles.append(tuple(edge(cyc[i - 1], cyc[i]) for i in range(f)))
        self.cycles = cycles
        on_edge = [[] for _ in self.pairs]
        for ci, cyc in enumerate(cycles):
            for e in cyc:
                on_edge[e].append(ci)
        self.on_edge = on_edge
        self.required = required
        self.edge = edge

    def _assign(self, color, domain, e, c, used):
        """Assign and propagate; returns the new used-color count or raises _Conflict."""
        queue = [(e, c)]
        while queue:
            e, c = queue.pop()
            if color[e] >= 0:
                if color[e] != c:
                    raise _Conflict
                continue
            d = domain[e]
            if d is not None and not (d >> c) & 1:
                raise _Conflict
            color[e] = c
            if c == used:
                used += 1
            for ci in self.on_edge[e]:
                free = -1
                mask = 0
                distinct = True
                for x in self.cycles[ci]:
                    cx = color[x]
                    if cx < 0:
                        if free >= 0:
                            free = -2
                            break
                        free = x
                    elif (mask >> cx) & 1:
                        distinct = False
                        break
                    else:
                        mask |= 1 << cx
                if not distinct or free == -2:
                    continue
                if free == -1:
                    raise _Conflict
                old = domain[free]
                new = mask if old is None else old & mask
                if new == 0:
                    raise _Conflict
                if new != old:
                    domain[free] = new
                    if new & (new - 1) == 0:
                        queue.append((free, new.bit_length() - 1))
        return used

    def _pick(self, color, domain):
        best = -1
        best_size = None
        first_free = -1
        for e, c in enumerate(color):
            if c >= 0:
                continue
            if first_free < 0:
                first_free = e
            d = domain[e]
            if d is not None:
                size = _popcount(d)
                if best_size is None or size < best_size:
                    best, best_size = e, size
        return best if best >= 0 else first_free

    def run(self) -> SearchResult:
        m = len(self.pairs)
        color = [-1] * m
        domain: list = [None] * m
        r = self.required
        used = 0
        try:
            for i in range(r):
                used = self._assign(color, domain, self.edge(i, (i + 1) % r), i, used)
        except _Conflict:
            return SearchResult(Status.UNSAT, self.nodes)
        try:
            found = self._dfs(color, domain, used)
        except TimeoutError:
            return SearchResult(Status.TIMEOUT, self.nodes)
        if found is None:
            return SearchResult(Status.UNSAT, self.nodes)
        n = self.n
        mat = [[-1] * n for _ in range(n)]
        for (u, v), c in zip(self.pairs, found):
            mat[u][v] = mat[v][u] = c
        return SearchResult(Status.SAT, self.nodes, ColoredClique(mat))

    def _dfs(self, color, domain, used):
        e = self._pick(color, domain)
        if e < 0:
            return list(color)
        d = domain[e]
        if d is None:
            values = range(used + 1)
        else:
            values = [c for c in range(d.bit_length()) if (d >> c) & 1]
        for c in values:
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                raise TimeoutError
            col = color[:]
            dom = domain[:]
            try:
                u = self._assign(col, dom, e, c, used)
            except _Conflict:
                continue
            found = self._dfs(col, dom, u)
            if found is not None:
                return found
        return None


def search_coloring(n: int, forbidden, required: int, budget: int | None = 10**7) -> SearchResult:
    """Search ``K_n`` colorings with a colorful ``required``-cycle avoiding ``forbidden``.

    UNSAT is only reported after the canonical search space is exhausted;
    running past ``budget`` search nodes yields TIMEOUT.  ``budget=None``
    removes the limit.
    """
    forbidden = {int(f) for f in forbidden}
    if not 3 <= required <= n:
        raise ValueError(f"required length must lie in [3, {n}]")
    if any(not 3 <= f <= n for f in forbidden):
        raise ValueError(f"forbidden lengths must lie in [3, {n}]")
    if required in forbidden:
        raise ValueError("required length is also forbidden")
    return _Search(n, forbidden, required, budget).run()
