"""Readers and writers for the ``.cgr``, ``.ug`` and ``.gt`` text formats.

``.cgr``::

    cgraph <n> <k>
    <u> <v> <c>        # one line per pair u < v, lexicographic order

``.ug``::

    graph <n> <m>
    <u> <v>            # u < v, lexicographic order, no duplicates

``.gt``::

    gtree <node_count>
    node <id> parent <pid|->
    sib <id1> <id2> <color>    # id1 < id2, lexicographic order
    leaf <id> vertex <v>
"""

from __future__ import annotations

from itertools import combinations
from pathlib import Path

import numpy as np

from .core import ColoredClique, ColoringError, SimpleGraph


class FormatError(ValueError):
    """Raised on malformed input text."""


def _lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def _ints(tokens, lineno) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def dumps_cgr(K: ColoredClique) -> str:
    out = [f"cgraph {K.n} {K.k}"]
    out.extend(f"{u} {v} {c}" for u, v, c in K.edges())
    return "\n".join(out) + "\n"


def loads_cgr(text: str) -> ColoredClique:
    lines = _lines(text)
    if not lines or lines[0][0] != "cgraph" or len(lines[0]) != 3:
        raise FormatError("expected header 'cgraph <n> <k>'")
    n, k = _ints(lines[0][1:], 1)
    if n < 1:
        raise FormatError("n must be at least 1")
    pairs = list(combinations(range(n), 2))
    body = lines[1:]
    if len(body) != len(pairs):
        raise FormatError(f"expected {len(pairs)} edge lines, got {len(body)}")
    mat = np.full((n, n), -1, dtype=np.int64)
    for i, (tokens, (u, v)) in enumerate(zip(body, pairs), start=2):
        if len(tokens) != 3:
            raise FormatError(f"line {i}: expected '<u> <v> <c>'")
        a, b, c = _ints(tokens, i)
        if (a, b) != (u, v):
            raise FormatError(f"line {i}: expected edge {u} {v}, got {a} {b}")
        if not 0 <= c < k:
            raise FormatError(f"line {i}: color {c} out of range [0,{k})")
        mat[u, v] = mat[v, u] = c
    try:
        return ColoredClique(mat, k)
    except ColoringError as exc:
        raise FormatError(str(exc)) from None


def dumps_ug(G: SimpleGraph) -> str:
    edges = G.sorted_edges()
    out = [f"graph {G.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def loads_ug(text: str) -> SimpleGraph:
    lines = _lines(text)
    if not lines or lines[0][0] != "graph" or len(lines[0]) != 3:
        raise FormatError("expected header 'graph <n> <m>'")
    n, m = _ints(lines[0][1:], 1)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"expected {m} edge lines, got {len(body)}")
    prev = None
    edges = []
    for i, tokens in enumerate(body, start=2):
        if len(tokens) != 2:
            raise FormatError(f"line {i}: expected '<u> <v>'")
        u, v = _ints(tokens, i)
        if not 0 <= u < v < n:
            raise FormatError(f"line {i}: need 0 <= u < v < {n}")
        if prev is not None and (u, v) <= prev:
            raise FormatError(f"line {i}: edges must be strictly increasing")
        prev = (u, v)
        edges.append((u, v))
    return SimpleGraph(n, edges)


def dumps_gt(T) -> str:
    out = [f"gtree {len(T.parent)}"]
    for i, p in enumerate(T.parent):
        out.append(f"node {i} parent {'-' if p is None else p}")
    for (a, b), c in sorted(T.sibling_colors.items()):
        out.append(f"sib {a} {b} {c}")
    for node, v in sorted(T.leaf_vertex.items()):
        out.append(f"leaf {node} vertex {v}")
    return "\n".join(out) + "\n"


def loads_gt(text: str):
    from .gallai import GallaiTree, TreeError

    lines = _lines(text)
    if not lines or lines[0][0] != "gtree" or len(lines[0]) != 2:
        raise FormatError("expected header 'gtree <node_count>'")
    (count,) = _ints(lines[0][1:], 1)
    parent: list = [0] * count
    seen_nodes = set()
    sibs: dict = {}
    leaves: dict = {}
    for i, tokens in enumerate(lines[1:], start=2):
        kind = tokens[0]
        if kind == "node" and len(tokens) == 4 and tokens[2] == "parent":
            (nid,) = _ints(tokens[1:2], i)
            if not 0 <= nid < count or nid in seen_nodes:
                raise FormatError(f"line {i}: bad or duplicate node id {nid}")
            seen_nodes.add(nid)
            parent[nid] = None if tokens[3] == "-" else _ints(tokens[3:4], i)[0]
        elif kind == "sib" and len(tokens) == 4:
            a, b, c = _ints(tokens[1:], i)
            if not a < b or (a, b) in sibs:
                raise FormatError(f"line {i}: sibling pair must satisfy id1 < id2 and be unique")
            sibs[(a, b)] = c
        elif kind == "leaf" and len(tokens) == 4 and tokens[2] == "vertex":
            nid, v = _ints([tokens[1], tokens[3]], i)
            if nid in leaves:
                raise FormatError(f"line {i}: duplicate leaf line for node {nid}")
            leaves[nid] = v
        else:
            raise FormatError(f"line {i}: unrecognised line {' '.join(tokens)!r}")
    if len(seen_nodes) != count:
        raise FormatError(f"expected {count} node lines, got {len(seen_nodes)}")
    try:
        return GallaiTree(parent, sibs, leaves)
    except TreeError as exc:
        raise FormatError(str(exc)) from None


def read_cgr(path) -> ColoredClique:
    return loads_cgr(Path(path).read_text())


def write_cgr(K: ColoredClique, path) -> None:
    Path(path).write_text(dumps_cgr(K))


def read_ug(path) -> SimpleGraph:
    return loads_ug(Path(path).read_text())


def write_ug(G: SimpleGraph, path) -> None:
    Path(path).write_text(dumps_ug(G))


def read_gt(path):
    return loads_gt(Path(path).read_text())


def write_gt(T, path) -> None:
    Path(path).write_text(dumps_gt(T))
