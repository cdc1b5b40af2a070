"""Colorful cycles and spectra.

The spectrum of a colored clique is the set of lengths ``L >= 2`` for which
no colorful ``L``-cycle exists.  Under ``m o n = m + n - 2`` every spectrum
is a submonoid of ``{2, 3, ...}`` that contains every length past the
vertex count, so it is stored as a finite exception set plus the start of
its solid tail.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import ColoredClique, Cycle


@dataclass(frozen=True)
class Spectrum:
    """Set of prohibited colorful-cycle lengths.

    ``n`` is a member iff ``n >= solid_from`` or ``2 <= n`` and ``n`` is not
    in ``exceptions``.  ``solid_from`` is normalized to ``max(exceptions) + 1``
    (or 2 when there are no exceptions), so equal sets compare equal.
    """

    exceptions: frozenset
    solid_from: int

    def __init__(self, exceptions: Iterable[int] = (), solid_from: int | None = None):
        exc = frozenset(int(x) for x in exceptions)
        if any(x < 3 for x in exc):
            raise ValueError("exceptions must be lengths >= 3 (2 is always a member)")
        tail = max(exc) + 1 if exc else 2
        if solid_from is not None:
            if solid_from < tail:
                raise ValueError("every exception must be below solid_from")
        object.__setattr__(self, "exceptions", exc)
        object.__setattr__(self, "solid_from", tail)

    def __contains__(self, length: int) -> bool:
        return length >= 2 and length not in self.exceptions

    def members(self, limit: int) -> list[int]:
        return [x for x in range(2, limit + 1) if x in self]

    def __str__(self):
        exc = ",".join(str(x) for x in sorted(self.exceptions))
        return f"spectrum exceptions=[{exc}] solid_from={self.solid_from}"


def _colorful_cycles_dfs(K: ColoredClique, wanted: set[int]) -> dict[int, tuple[int, ...]]:
    """Find one colorful cycle for as many lengths in ``wanted`` as exist.

    Each undirected cycle is reached once: it starts at its smallest vertex
    and its second vertex is smaller than its last.  Colors used along the
    path are tracked in a bitmask so non-colorful branches are cut at once.
    """
    n = K.n
    rows = K.rows
    wanted = {L for L in wanted if 3 <= L <= min(n, K.k)}
    found: dict[int, tuple[int, ...]] = {}
    if not wanted:
        return found
    max_len = max(wanted)
    path: list[int] = []
    on_path = [False] * n

    def extend(mask: int) -> bool:
        last = path[-1]
        depth = len(path)
        start = path[0]
        if depth >= 3 and depth in wanted and depth not in found and path[1] < last:
            c = rows[last][start]
            if not (mask >> c) & 1:
                found[depth] = tuple(path)
                if len(found) == len(wanted):
                    return True
        if depth == max_len:
            return False
        row = rows[last]
        for w in range(start + 1, n):
            if on_path[w]:
                continue
            c = row[w]
            if (mask >> c) & 1:
                continue
            path.append(w)
            on_path[w] = True
            done = extend(mask | (1 << c))
            path.pop()
            on_path[w] = False
            if done:
                return True
        return False

    for s in range(n - 2):
        path.append(s)
        on_path[s] = True
        done = extend(0)
        path.pop()
        on_path[s] = False
        if done:
            break
    return found


def find_colorful_cycle(K: ColoredClique, length: int) -> Cycle | None:
    """Return a colorful cycle with exactly ``length`` vertices, or None."""
    if length < 3:
        raise ValueError("colorful cycles have length >= 3")
    hit = _colorful_cycles_dfs(K, {length})
    return Cycle(hit[length]) if length in hit else None


def has_colorful_cycle(K: ColoredClique, length: int) -> bool:
    return find_colorful_cycle(K, length) is not None


def colorful_lengths(K: ColoredClique) -> dict[int, Cycle]:
    """Map each length admitting a colorful cycle to one witness."""
    hits = _colorful_cycles_dfs(K, set(range(3, K.n + 1)))
    return {L: Cycle(p) for L, p in sorted(hits.items())}


def spectrum(K: ColoredClique) -> Spectrum:
    return Spectrum(colorful_lengths(K))


def monoid_closure(generators: Iterable[int], limit: int) -> set[int]:
    """Submonoid of ``({2,3,...}, m+n-2)`` generated by ``generators``, cut at ``limit``."""
    if limit < 2:
        raise ValueError("limit must be >= 2")
    gens = sorted({int(g) for g in generators})
    if gens and gens[0] < 2:
        raise ValueError("generators must be >= 2")
    steps = [g - 2 for g in gens if g > 2]
    reach = {2}
    frontier = [2]
    while frontier:
        nxt = []
        for x in frontier:
            for s in steps:
                y = x + s
                if y <= limit and y not in reach:
                    reach.add(y)
                    nxt.append(y)
        frontier = nxt
    return reach


def check_spectrum_laws(S: Spectrum) -> bool:
    """Check the structural laws every realizable spectrum obeys.

    * closure under ``m o n = m + n - 2``;
    * containing 3 forces the whole of ``{2, 3, ...}``;
    * containing 4 forces ``{2, 4, 6, ..., m-1, m, m+1, ...}`` for an odd ``m``.
    """
    top = S.solid_from
    members = S.members(top)
    for i, a in enumerate(members):
        for b in members[i:]:
            if a + b - 2 not in S:
                return False
    if 3 in S and S.exceptions:
        return False
    if 4 in S:
        if any(x % 2 == 0 for x in S.exceptions):
            return False
        odd = min(x for x in range(3, top + 2, 2) if x in S)
        if any(x > odd for x in S.exceptions):
            return False
    return True
