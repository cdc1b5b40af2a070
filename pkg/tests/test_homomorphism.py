import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gallaikit import (
    SimpleGraph,
    brute_force_full_hom,
    classify_monochrome,
    exists_full_hom,
    gallai_host,
    is_exact_gallai_monochrome,
    is_full_hom,
    monochromes,
    named_graph,
    reduced_form,
    simple_clique,
    spanning_monochrome,
    type_name,
)
from gallaikit.constructions import random_connected_graph
from gallaikit.homomorphism import C5, FullHom, canonical_form, compose, is_reduced
from gallaikit.oracles import atlas_graphs, enumerate_full_homs

P1, P2, P3, P4 = (named_graph("P", k) for k in (1, 2, 3, 4))
C3 = named_graph("C", 3)
A = named_graph("A")
STAR = SimpleGraph(4, [(0, 1), (0, 2), (0, 3)])
K22 = SimpleGraph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
K23 = SimpleGraph(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph(n, [p for p, b in zip(pairs, bits) if b])


def test_full_hom_examples():
    for G in (P3, C5, A):
        assert is_full_hom(FullHom(G, G, tuple(range(G.n))))
    assert not is_full_hom(FullHom(P1, SimpleGraph(1), (0, 0)))


@settings(max_examples=60, deadline=None)
@given(graphs(5), graphs(4), graphs(4))
def test_composition_of_full_homs(G, H, J):
    fs = list(enumerate_full_homs(G, H))[:5]
    gs = list(enumerate_full_homs(H, J))[:5]
    for f, g in product(fs, gs):
        h = compose(FullHom(H, J, g), FullHom(G, H, f))
        assert is_full_hom(h)


def test_reduced_form_examples():
    red = reduced_form(P2)
    assert canonical_form(red.graph) == canonical_form(P1)
    red = reduced_form(C5)
    assert red.graph == C5 and sorted(red.r.map) == list(range(5))
    assert canonical_form(reduced_form(K23).graph) == canonical_form(P1)


@settings(max_examples=200, deadline=None)
@given(graphs(7))
def test_reduced_form_properties(G):
    red = reduced_form(G)
    assert is_reduced(red.graph)
    assert is_full_hom(red.r) and is_full_hom(red.h)
    assert set(red.r.map) == set(range(red.graph.n))
    assert all(red.r.map[red.h.map[i]] == i for i in range(red.graph.n))


def test_type_examples():
    assert type_name(STAR) == "P1"
    assert type_name(P3) == "P3"
    assert type_name(C5) == "C5"
    assert type_name(SimpleGraph(1)) == "K1"


def test_canonical_form_matches_networkx_isomorphism():
    rng = random.Random(4)
    for _ in range(60):
        G = random_connected_graph(rng, rng.randint(2, 7), p=0.4)
        perm = list(range(G.n))
        rng.shuffle(perm)
        H = SimpleGraph(G.n, [(perm[u], perm[v]) for u, v in G.edges])
        assert canonical_form(G) == canonical_form(H)
    graphs_ = list(atlas_graphs(5, connected=False))
    seen = {canonical_form(g) for g in graphs_}
    assert len(seen) == len(graphs_)


def test_exists_full_hom_examples():
    f = exists_full_hom(P2, C5)
    assert f is not None and is_full_hom(f)
    assert exists_full_hom(C3, C5) is None
    assert exists_full_hom(P4, C5) is None


def test_brute_force_examples():
    assert brute_force_full_hom(P2, P1)
    assert not brute_force_full_hom(C3, C5)
    assert not brute_force_full_hom(A, C5)
    with pytest.raises(ValueError):
        brute_force_full_hom(SimpleGraph(9), C5)


@settings(max_examples=150, deadline=None)
@given(graphs(6), graphs(5))
def test_exists_full_hom_matches_oracle(G, H):
    f = exists_full_hom(G, H)
    assert (f is not None) == brute_force_full_hom(G, H)
    if f is not None:
        assert is_full_hom(f)


def test_full_homs_out_of_reduced_graphs_are_injective():
    for G in atlas_graphs(5, connected=False):
        if not is_reduced(G):
            continue
        for H in atlas_graphs(5, connected=False):
            for f in enumerate_full_homs(G, H):
                assert len(set(f)) == G.n


def test_monochromes_examples():
    ms = monochromes(simple_clique(5))
    assert len(ms) == 2 and all(type_name(m.graph) == "C5" for m in ms)
    ms = monochromes(simple_clique(4))
    assert len(ms) == 2 and all(canonical_form(m.graph) == canonical_form(P3) for m in ms)
    ms = monochromes(gallai_host(STAR))
    assert [m.color for m in ms] == [0, 1]
    assert ms[0].graph == STAR
    assert ms[1].vertices == (1, 2, 3) and ms[1].graph == C3


def test_spanning_monochrome_examples(block_k4):
    from gallaikit import ColoredClique

    m = spanning_monochrome(ColoredClique.monochromatic(4))
    assert m.vertices == (0, 1, 2, 3) and len(m.graph.edges) == 6
    m = spanning_monochrome(simple_clique(5))
    assert len(m.vertices) == 5 and type_name(m.graph) == "C5"
    m = spanning_monochrome(block_k4)
    assert m.color == block_k4(0, 2) and canonical_form(m.graph) == canonical_form(K22)


def test_classify_examples():
    assert str(classify_monochrome(C3)) == "WITNESS C3 vertices=[0,1,2]"
    res = classify_monochrome(C5)
    assert res.hom is not None and is_full_hom(res.hom)
    # the hom is a rotation or reflection of the identity
    assert is_full_hom(FullHom(C5, C5, res.hom.map)) and len(set(res.hom.map)) == 5
    assert str(classify_monochrome(A)) == "WITNESS A vertices=[0,1,2,3,4,5]"
    with pytest.raises(ValueError):
        classify_monochrome(SimpleGraph(2))


def test_exact_monochrome_examples():
    assert is_exact_gallai_monochrome(P3)
    assert not is_exact_gallai_monochrome(P4)
    assert is_exact_gallai_monochrome(K22)


def test_duality_on_all_connected_graphs_up_to_six():
    for G in atlas_graphs(6):
        res = classify_monochrome(G)
        assert (res.hom is not None) == brute_force_full_hom(G, C5)
        if res.witness is not None:
            name, verts = res.witness
            assert brute_force_full_hom(named_graph(name), G.induced(verts))
            assert canonical_form(G.induced(verts)) == canonical_form(named_graph(name))
        elif G.n >= 2:
            assert type_name(G) in ("P1", "P3", "C5")


def test_duality_on_random_larger_graphs():
    rng = random.Random(9)
    for _ in range(40):
        G = random_connected_graph(rng, rng.randint(8, 12), p=rng.random() * 0.3)
        res = classify_monochrome(G)
        assert (res.hom is not None) == (exists_full_hom(G, C5) is not None)
        if res.witness is None:
            assert is_full_hom(res.hom)
        else:
            name, verts = res.witness
            assert canonical_form(G.induced(verts)) == canonical_form(named_graph(name))
