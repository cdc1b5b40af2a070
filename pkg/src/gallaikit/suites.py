"""Named verification suites.

Each suite reproduces one of the structural results this package is built
around, cross-checked by an independent brute-force route, and reports
pass/fail with elapsed time.  ``python -m gallaikit verify all`` runs them.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations

from .constructions import (
    even_gon_no_preceding,
    extremal_exact_gallai,
    gallai_host,
    odd_gon_no_squares,
    random_connected_graph,
    random_exact_gallai,
    random_tree_2_clique,
)
from .core import ColoredClique, SimpleGraph, is_colorful
from .gallai import check_theorem4, decompose, is_exact_gallai, is_gallai, max_exact_gallai_order, recompose
from .homomorphism import (
    C5,
    FullHom,
    brute_force_full_hom,
    classify_monochrome,
    find_induced_copy,
    is_full_hom,
    is_reduced,
    monochromes,
    reduced_form,
    spanning_monochrome,
    type_name,
)
from .oracles import atlas_graphs, enumerate_full_homs, naive_colorful_lengths, two_colorings
from .search import Status, search_coloring
from .spectrum import find_colorful_cycle, spectrum


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str
    seconds: float
    # set when the suite could not conclude within its budget
    timeout: bool = False

    def line(self) -> str:
        tag = "TIMEOUT" if self.timeout else ("PASS" if self.passed else "FAIL")
        return f"{tag} {self.name} {self.detail} time={self.seconds:.2f}s"


def tree_clique_corpus(count: int = 500, seed: int = 0, max_n: int = 12) -> list[ColoredClique]:
    rng = random.Random(seed)
    return [random_tree_2_clique(rng, rng.randint(1, max_n)) for _ in range(count)]


def exact_corpus(count: int = 200, seed: int = 0, max_n: int = 50) -> list[ColoredClique]:
    rng = random.Random(seed)
    return [random_exact_gallai(rng, rng.randint(2, max_n)) for _ in range(count)]


def _cycle_ok(K, length):
    cyc = find_colorful_cycle(K, length)
    return cyc is not None and len(cyc) == length and is_colorful(K, cyc)


def odd_gon_suite() -> tuple[bool, str]:
    notes = []
    ok = True
    for m in (3, 5, 7, 9):
        K = odd_gon_no_squares(m)
        good = _cycle_ok(K, m) and find_colorful_cycle(K, 4) is None
        if m <= 7:
            S = spectrum(K)
            good &= S.exceptions == set(range(3, m + 1, 2))
            good &= naive_colorful_lengths(K) == set(S.exceptions)
        ok &= good
        notes.append(f"m={m}:{'ok' if good else 'bad'}")
    return ok, " ".join(notes)


def even_gon_suite() -> tuple[bool, str]:
    notes = []
    ok = True
    for m in (3, 4, 5):
        K = even_gon_no_preceding(m)
        good = _cycle_ok(K, 2 * m) and find_colorful_cycle(K, 2 * m - 1) is None and K.k == 2 * m
        if m <= 4:
            naive = naive_colorful_lengths(K)
            good &= 2 * m in naive and 2 * m - 1 not in naive
        ok &= good
        notes.append(f"m={m}:{'ok' if good else 'bad'}")
    return ok, " ".join(notes)


def theorem4_suite(count: int = 500) -> tuple[bool, str]:
    bad = 0
    for K in tree_clique_corpus(count):
        rep = check_theorem4(K)
        fine = (
            is_gallai(K)
            and not spectrum(K).exceptions
            and rep.ok
            and rep.exhaustive
            and recompose(decompose(K)) == K
        )
        bad += not fine
    return bad == 0, f"cliques={count} failures={bad}"


def decagon_suite(budget: int | None = 10**7) -> tuple[bool, str, bool]:
    a = search_coloring(4, {3}, 4, budget=10**6)
    b = search_coloring(6, {5}, 6, budget=10**6)
    anchors = a.status is Status.UNSAT and b.status is Status.SAT
    if b.witness is not None:
        anchors &= _cycle_ok(b.witness, 6) and find_colorful_cycle(b.witness, 5) is None
    c = search_coloring(10, {5}, 10, budget=budget)
    detail = f"K4/3/4={a} K6/5/6={b} K10/5/10={c}"
    return anchors and c.status is not Status.SAT, detail, c.status is Status.TIMEOUT


def _is_exact_matrix(mat) -> bool:
    n = len(mat)
    for a, b, c in combinations(range(n), 3):
        if len({mat[a][b], mat[a][c], mat[b][c]}) != 2:
            return False
    return True


def verbnd_suite() -> tuple[bool, str]:
    counts = []
    ok = True
    for k in range(1, 6):
        K = extremal_exact_gallai(k)
        counts.append(K.n)
        ok &= K.k == k and K.n == max_exact_gallai_order(k) and is_exact_gallai(K)
    ok &= counts == [2, 5, 10, 25, 50]
    exact6 = sum(_is_exact_matrix(m) for m in two_colorings(6))
    ok &= exact6 == 0
    return ok, f"orders={counts} exact_2colorings_K6={exact6}"


def duality_suite(max_n: int = 7) -> tuple[bool, str]:
    checked = 0
    bad = 0
    hom_types = set()
    for G in atlas_graphs(max_n):
        if G.n < 2:
            continue
        checked += 1
        res = classify_monochrome(G)
        oracle = brute_force_full_hom(G, C5)
        fine = (res.hom is not None) == oracle
        if res.hom is not None:
            fine &= is_full_hom(res.hom)
            hom_types.add(type_name(G))
        else:
            name, verts = res.witness
            pattern = {"C3": (3, 3), "P4": (5, 4), "A": (6, 6)}[name]
            sub = G.induced(verts)
            fine &= (sub.n, len(sub.edges)) == pattern and find_induced_copy(sub, G) is not None
            fine &= brute_force_full_hom(_named(name), G)
        bad += not fine
    ok = bad == 0 and hom_types == {"P1", "P3", "C5"}
    return ok, f"graphs={checked} failures={bad} hom_types={sorted(hom_types)}"


def _named(name):
    from .constructions import named_graph

    return named_graph(name)


def exgallmon_suite(count: int = 200) -> tuple[bool, str]:
    bad = 0
    total = 0
    for K in exact_corpus(count):
        if not is_exact_gallai(K):
            bad += 1
            continue
        for mono in monochromes(K):
            total += 1
            bad += type_name(mono.graph) not in ("P1", "P3", "C5")
    return bad == 0, f"cliques={count} monochromes={total} failures={bad}"


def gallmon_suite() -> tuple[bool, str]:
    bad = 0
    cliques = [K for K in tree_clique_corpus() + exact_corpus() if K.n >= 2]
    for K in cliques:
        mono = spanning_monochrome(K)
        bad += len(mono.vertices) != K.n
    rng = random.Random(0)
    hosts = 0
    for _ in range(100):
        H = random_connected_graph(rng, rng.randint(2, 20), p=rng.random() * 0.5)
        K = gallai_host(H)
        zero = [m for m in monochromes(K) if m.color == 0]
        fine = is_gallai(K) and len(zero) == 1 and zero[0].vertices == tuple(range(H.n)) and zero[0].graph == H
        bad += not fine
        hosts += 1
    return bad == 0, f"spanning_checked={len(cliques)} hosts={hosts} failures={bad}"


def _all_graphs(max_n: int):
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            yield SimpleGraph(n, [p for i, p in enumerate(pairs) if (bits >> i) & 1])


def reduced_suite(max_n: int = 5) -> tuple[bool, str]:
    bad = 0
    labelled = 0
    for G in _all_graphs(max_n):
        labelled += 1
        red = reduced_form(G)
        surj = set(red.r.map) == set(range(red.graph.n))
        back = all(red.r.map[red.h.map[i]] == i for i in range(red.graph.n))
        bad += not (is_reduced(red.graph) and is_full_hom(red.r) and surj and is_full_hom(red.h) and back)
    targets = list(atlas_graphs(max_n, connected=False))
    pairs = 0
    for G in targets:
        red = reduced_form(G)
        for H in targets:
            for f in enumerate_full_homs(G, H):
                pairs += 1
                if is_reduced(G) and len(set(f)) != G.n:
                    bad += 1
                if set(f) == set(range(H.n)):
                    # full surjection: H is at least as large as the reduced form and
                    # factors back onto it
                    g = {}
                    for v, w in enumerate(f):
                        if g.setdefault(w, red.r.map[v]) != red.r.map[v]:
                            bad += 1
                    if H.n < red.graph.n or not is_full_hom(FullHom(H, red.graph, tuple(g[w] for w in range(H.n)))):
                        bad += 1
    return bad == 0, f"labelled_graphs={labelled} full_homs={pairs} failures={bad}"


SUITES = {
    "odd-gon": odd_gon_suite,
    "even-gon": even_gon_suite,
    "theorem4": theorem4_suite,
    "decagon": decagon_suite,
    "verbnd": verbnd_suite,
    "duality": duality_suite,
    "exgallmon": exgallmon_suite,
    "gallmon": gallmon_suite,
    "reduced": reduced_suite,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    fn = SUITES[name]
    t0 = time.perf_counter()
    out = fn(**kwargs)
    elapsed = time.perf_counter() - t0
    timeout = False
    if len(out) == 3:
        passed, detail, timeout = out
    else:
        passed, detail = out
    return SuiteResult(name, bool(passed), detail, elapsed, timeout)
