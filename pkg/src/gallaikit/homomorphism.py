"""Full homomorphisms, reduced forms, monochromes and the C5 duality.

A full homomorphism ``f: G -> H`` satisfies ``uv in E_G  <=>  f(u)f(v) in E_H``
for all vertices, so adjacent vertices never share an image.  Merging
vertices with equal neighborhoods gives the reduced form, the smallest full
image of a graph; its isomorphism class is the graph's *type*.

Connected graphs that map fully into ``C5`` are exactly those containing no
induced ``C3``, ``P4`` (five vertices) or ``A``.  :func:`classify_monochrome`
returns one of the two certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Sequence

from .constructions import cycle_graph, graph_a, path_graph
from .core import ColoredClique, SimpleGraph

CANON_CAP = 10


@dataclass(frozen=True)
class FullHom:
    domain: SimpleGraph
    codomain: SimpleGraph
    map: tuple

    def __call__(self, v: int) -> int:
        return self.map[v]

    def __str__(self):
        return " ".join(f"{v}->{w}" for v, w in enumerate(self.map))


def is_full_hom(f: FullHom) -> bool:
    G, H, m = f.domain, f.codomain, f.map
    if len(m) != G.n:
        raise ValueError("map must be total on the domain")
    if any(not 0 <= w < H.n for w in m):
        raise ValueError("map values must be codomain vertices")
    for u, v in combinations(range(G.n), 2):
        if G.has_edge(u, v) != H.has_edge(m[u], m[v]):
            return False
    return True


def compose(g: FullHom, f: FullHom) -> FullHom:
    """``g`` after ``f``."""
    return FullHom(f.domain, g.codomain, tuple(g.map[x] for x in f.map))


@dataclass(frozen=True)
class Reduction:
    """Reduced form with its quotient map ``r`` and a section ``h`` (``r o h = id``)."""

    graph: SimpleGraph
    r: FullHom
    h: FullHom


def reduced_form(G: SimpleGraph) -> Reduction:
    """Merge vertices with identical neighborhoods.

    Classes are numbered by their smallest vertex; the section picks that
    smallest vertex as representative.
    """
    classes: dict = {}
    cls = []
    reps = []
    for v in range(G.n):
        key = G.adj[v]
        if key not in classes:
            classes[key] = len(reps)
            reps.append(v)
        cls.append(classes[key])
    edges = {(min(cls[u], cls[v]), max(cls[u], cls[v])) for u, v in G.edges}
    R = SimpleGraph(len(reps), edges)
    return Reduction(R, FullHom(G, R, tuple(cls)), FullHom(R, G, tuple(reps)))


def is_reduced(G: SimpleGraph) -> bool:
    return len(set(G.adj)) == G.n


def canonical_form(G: SimpleGraph) -> SimpleGraph:
    """Canonical representative of the isomorphism class of ``G``.

    Vertices are sorted by degree and only permutations preserving that order
    are tried; the relabelling whose upper-triangle adjacency bit string is
    smallest wins.  Limited to ``CANON_CAP`` vertices.
    """
    n = G.n
    if n > CANON_CAP:
        raise ValueError(f"canonical form is limited to {CANON_CAP} vertices")
    deg = G.degrees()
    groups: dict = {}
    for v in range(n):
        groups.setdefault(deg[v], []).append(v)
    buckets = [groups[d] for d in sorted(groups)]
    pairs = list(combinations(range(n), 2))
    best = None
    for choice in product(*(permutations(b) for b in buckets)):
        order = [v for part in choice for v in part]
        key = tuple(G.has_edge(order[i], order[j]) for i, j in pairs)
        if best is None or key < best:
            best = key
    return SimpleGraph(n, [p for p, bit in zip(pairs, best) if bit])


_NAMED_TYPES = {
    "K1": SimpleGraph(1),
    "P1": path_graph(1),
    "P3": path_graph(3),
    "C5": cycle_graph(5),
    "C3": cycle_graph(3),
    "P4": path_graph(4),
    "A": graph_a(),
}
_NAMED_CANON = {name: canonical_form(g) for name, g in _NAMED_TYPES.items()}


def graph_type(G: SimpleGraph) -> SimpleGraph:
    """Canonical form of the reduced form of ``G``."""
    return canonical_form(reduced_form(G).graph)


def type_name(G: SimpleGraph) -> str:
    """Short name of ``graph_type(G)``.

    Known types are ``K1``, ``P1``, ``P3``, ``C5``, ``C3``, ``P4`` and ``A``;
    anything else is rendered ``G<n>:<edges as i-j,...>`` on the canonical form.
    """
    t = graph_type(G)
    for name, canon in _NAMED_CANON.items():
        if t == canon:
            return name
    return f"G{t.n}:" + ",".join(f"{u}-{v}" for u, v in t.sorted_edges())


def _induced_embeddings(P: SimpleGraph, G: SimpleGraph):
    """Induced copies of ``P`` in ``G``, as image tuples in lexicographic order."""
    k = P.n
    img: list[int] = []
    used = [False] * G.n

    def extend():
        i = len(img)
        if i == k:
            yield tuple(img)
            return
        for w in range(G.n):
            if used[w]:
                continue
            if all(P.has_edge(j, i) == G.has_edge(img[j], w) for j in range(i)):
                img.append(w)
                used[w] = True
                yield from extend()
                img.pop()
                used[w] = False

    yield from extend()


def find_induced_copy(P: SimpleGraph, G: SimpleGraph) -> tuple | None:
    """Lexicographically least induced copy of ``P`` in ``G``, or None."""
    return next(_induced_embeddings(P, G), None)


def exists_full_hom(G: SimpleGraph, H: SimpleGraph) -> FullHom | None:
    """A full homomorphism ``G -> H`` if one exists, else None.

    One exists iff the reduced form of ``G`` embeds as an induced subgraph of
    the reduced form of ``H``; the witness is ``h_H o embedding o r_G``.
    """
    rg = reduced_form(G)
    rh = reduced_form(H)
    emb = find_induced_copy(rg.graph, rh.graph)
    if emb is None:
        return None
    return FullHom(G, H, tuple(rh.h.map[emb[c]] for c in rg.r.map))


def brute_force_full_hom(G: SimpleGraph, H: SimpleGraph, cap: int = 8) -> bool:
    """Exhaustive search over maps ``V_G -> V_H``; for testing only.

    Vertices of ``G`` are assigned in order and a prefix is abandoned as soon
    as one of its pairs breaks the edge biconditional, so every total map is
    covered without any appeal to reduced forms.
    """
    if G.n > cap or H.n > cap:
        raise ValueError(f"oracle is capped at {cap} vertices per graph")
    m: list[int] = []

    def extend() -> bool:
        i = len(m)
        if i == G.n:
            return True
        for w in range(H.n):
            if all(G.has_edge(j, i) == H.has_edge(m[j], w) for j in range(i)):
                m.append(w)
                if extend():
                    return True
                m.pop()
        return False

    return extend()


@dataclass(frozen=True)
class Monochrome:
    """A connected component of one color class.

    ``vertices`` are the original clique vertices in increasing order and
    ``graph`` is the component relabelled to ``0..len(vertices)-1``.
    """

    color: int
    vertices: tuple
    graph: SimpleGraph


def monochromes(K: ColoredClique) -> list[Monochrome]:
    """Components with at least one edge of every color class, by color then smallest vertex."""
    out = []
    rows = K.rows
    for c in range(K.k):
        adj = [[w for w in range(K.n) if w != v and rows[v][w] == c] for v in range(K.n)]
        seen = [False] * K.n
        for s in range(K.n):
            if seen[s] or not adj[s]:
                continue
            comp = {s}
            seen[s] = True
            stack = [s]
            while stack:
                for w in adj[stack.pop()]:
                    if not seen[w]:
                        seen[w] = True
                        comp.add(w)
                        stack.append(w)
            verts = tuple(sorted(comp))
            pos = {v: i for i, v in enumerate(verts)}
            edges = [(pos[u], pos[w]) for u in verts for w in adj[u] if u < w]
            out.append(Monochrome(c, verts, SimpleGraph(len(verts), edges)))
    return out


def spanning_monochrome(K: ColoredClique) -> Monochrome:
    """A monochrome covering every vertex of a Gallai clique.

    The monochrome with the most vertices (ties: smallest color) always spans
    when ``K`` is Gallai.
    """
    from .gallai import NotGallaiError, find_rainbow_triangle

    if K.n < 2:
        raise ValueError("need at least two vertices")
    w = find_rainbow_triangle(K)
    if w is not None:
        raise NotGallaiError(w)
    best = max(monochromes(K), key=lambda m: (len(m.vertices), -m.color))
    if len(best.vertices) != K.n:
        raise AssertionError("largest monochrome of a Gallai clique does not span")
    return best


@dataclass(frozen=True)
class DualityResult:
    """Exactly one of ``hom`` (into C5) or ``witness`` (obstruction name, induced copy)."""

    hom: FullHom | None = None
    witness: tuple | None = None

    def __post_init__(self):
        if (self.hom is None) == (self.witness is None):
            raise ValueError("exactly one branch must be populated")

    def __str__(self):
        if self.hom is not None:
            return f"HOM {self.hom}"
        name, verts = self.witness
        return f"WITNESS {name} vertices=[{','.join(map(str, verts))}]"


C5 = cycle_graph(5)
_OBSTRUCTIONS = [("C3", cycle_graph(3)), ("P4", path_graph(4)), ("A", graph_a())]


def _hom_via_c5(G: SimpleGraph, c5: Sequence[int]) -> list[int]:
    # every vertex has exactly one index i with both c5[i-1] and c5[i+1] as neighbours
    f = []
    for v in range(G.n):
        hits = [i for i in range(5) if G.has_edge(v, c5[(i - 1) % 5]) and G.has_edge(v, c5[(i + 1) % 5])]
        assert len(hits) == 1, f"vertex {v} has {len(hits)} candidate positions on the 5-cycle"
        f.append(hits[0])
    return f


def _hom_via_path(G: SimpleGraph, p: Sequence[int]) -> list[int]:
    """Map onto a longest induced path ``p`` (1 to 3 edges), laid along C5 as 0,1,2,3."""
    k = len(p) - 1
    e = G.has_edge
    f = []
    for v in range(G.n):
        if k == 1:
            f.append(0 if v == p[0] else 1)
            continue
        if k == 2:
            if e(v, p[0]) and e(v, p[2]):
                f.append(1)
            else:
                assert e(v, p[1]), f"vertex {v} misses the middle of the induced path"
                f.append(0)
            continue
        cands = []
        if e(v, p[1]) and not e(v, p[3]):
            cands.append(0)
        if e(v, p[0]) and e(v, p[2]):
            cands.append(1)
        if e(v, p[1]) and e(v, p[3]):
            cands.append(2)
        if e(v, p[2]) and not e(v, p[0]):
            cands.append(3)
        assert len(cands) == 1, f"vertex {v} has {len(cands)} candidate positions on the path"
        f.append(cands[0])
    return f


def classify_monochrome(G: SimpleGraph) -> DualityResult:
    """Full homomorphism into C5, or an induced C3, P4 or A.

    Obstructions are searched in that order (lexicographically least copy).
    Without one, the map is built from an induced C5 if present, otherwise
    from a longest induced path, and checked before returning.
    """
    if G.n == 0 or not G.is_connected():
        raise ValueError("classify_monochrome needs a connected graph")
    for name, P in _OBSTRUCTIONS:
        copy = find_induced_copy(P, G)
        if copy is not None:
            return DualityResult(witness=(name, copy))
    if G.n == 1:
        f = [0]
    else:
        c5 = find_induced_copy(C5, G)
        if c5 is not None:
            f = _hom_via_c5(G, c5)
        else:
            path = None
            for k in (3, 2, 1):
                path = find_induced_copy(path_graph(k), G)
                if path is not None:
                    break
            f = _hom_via_path(G, path)
    hom = FullHom(G, C5, tuple(f))
    assert is_full_hom(hom), "constructed map into C5 is not full"
    return DualityResult(hom=hom)


EXACT_TYPES = ("P1", "P3", "C5")


def is_exact_gallai_monochrome(G: SimpleGraph) -> bool:
    """Whether ``G`` can be a monochrome of an exact Gallai clique.

    Decided twice, by the C5 duality and by the reduced type, and the two
    answers must agree.
    """
    if G.n < 2:
        raise ValueError("a monochrome has at least one edge")
    by_duality = classify_monochrome(G).hom is not None
    by_type = type_name(G) in EXACT_TYPES
    assert by_duality == by_type, "duality and type disagree"
    return by_duality
