import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings

from gallaikit import (
    ColoredClique,
    GallaiTree,
    NotGallaiError,
    TreeError,
    check_theorem4,
    colors_between,
    decompose,
    extremal_exact_gallai,
    find_rainbow_triangle,
    homogeneous_2_partition,
    is_exact_gallai,
    is_gallai,
    is_irreducible,
    max_exact_gallai_order,
    odd_gon_no_squares,
    recompose,
    simple_clique,
    smallest_module,
    verify_exact_structure,
)
from gallaikit.constructions import random_exact_gallai, random_tree_2_clique
from gallaikit.oracles import literal_theorem4, restricted_growth_colorings

from conftest import cliques


def is_module(K, M):
    return all(len(colors_between(K, M, {w})) == 1 for w in range(K.n) if w not in M)


def test_gallai_examples():
    assert is_gallai(ColoredClique.monochromatic(3))
    assert not is_gallai(ColoredClique.rainbow(3))
    assert find_rainbow_triangle(ColoredClique.rainbow(3)) == (0, 1, 2)
    assert not is_gallai(odd_gon_no_squares(5))


def test_exact_examples():
    assert is_exact_gallai(simple_clique(5))
    assert not is_exact_gallai(ColoredClique.monochromatic(3))
    assert is_exact_gallai(extremal_exact_gallai(3))


def test_smallest_module_examples(block_k4):
    assert smallest_module(ColoredClique.monochromatic(4), 0, 1) == {0, 1}
    K4 = simple_clique(4)
    for u, v in combinations(range(4), 2):
        assert smallest_module(K4, u, v) == {0, 1, 2, 3}
    assert smallest_module(block_k4, 0, 1) == {0, 1}


@settings(max_examples=100, deadline=None)
@given(cliques(min_n=2, max_n=7, max_colors=4))
def test_smallest_module_is_least_module(K):
    # oracle: intersect every module holding the pair
    for u, v in [(0, 1), (0, K.n - 1)]:
        if u == v:
            continue
        got = smallest_module(K, u, v)
        assert is_module(K, got)
        others = [w for w in range(K.n) if w not in (u, v)]
        least = set(range(K.n))
        for r in range(len(others) + 1):
            for extra in combinations(others, r):
                M = {u, v, *extra}
                if is_module(K, M):
                    least &= M
        assert got == least


def test_irreducible_examples():
    assert is_irreducible(simple_clique(4))
    assert is_irreducible(ColoredClique.from_function(2, lambda u, v: 0))
    assert not is_irreducible(ColoredClique.from_function(3, lambda u, v: 1 if (u, v) == (0, 1) else 0))


def test_homogeneous_partition_examples(block_k4):
    P = homogeneous_2_partition(block_k4)
    assert set(P.blocks) == {frozenset({0, 1}), frozenset({2, 3})}
    assert P.delta == {block_k4(0, 2)}
    P = homogeneous_2_partition(simple_clique(4))
    assert sorted(map(sorted, P.blocks)) == [[0], [1], [2], [3]]
    assert P.delta == {0, 1}
    P = homogeneous_2_partition(ColoredClique.monochromatic(3))
    assert P.blocks == (frozenset({0}), frozenset({1, 2}))
    assert P.delta == {0}
    with pytest.raises(NotGallaiError):
        homogeneous_2_partition(ColoredClique.rainbow(3))


def test_decompose_examples(block_k4):
    K2 = ColoredClique.from_function(2, lambda u, v: 0)
    T = decompose(K2)
    assert len(T.parent) == 3 and T.children[T.root] == [1, 2]
    T = decompose(block_k4)
    assert T.height() == 2
    assert [len(T.children[t]) for t in T.internal_nodes()] == [2, 2, 2]
    T = decompose(extremal_exact_gallai(4))
    assert T.height() == 2
    assert all(len(T.children[t]) == 5 for t in T.internal_nodes())
    with pytest.raises(NotGallaiError) as err:
        decompose(ColoredClique.rainbow(3))
    assert err.value.witness == (0, 1, 2)


def test_recompose_examples(block_k4):
    T = GallaiTree([None, 0, 0], {(1, 2): 0}, {1: 0, 2: 1})
    assert recompose(T) == ColoredClique.from_function(2, lambda u, v: 0)
    # root factor of size 2 over two size-2 factors
    T = GallaiTree(
        [None, 0, 0, 1, 1, 2, 2],
        {(1, 2): 2, (3, 4): 0, (5, 6): 1},
        {3: 0, 4: 1, 5: 2, 6: 3},
    )
    assert recompose(T) == block_k4


def test_tree_validation():
    with pytest.raises(TreeError):
        GallaiTree([None, 0], {}, {1: 0})
    with pytest.raises(TreeError):
        GallaiTree([None, 0, 0], {}, {1: 0, 2: 1})
    with pytest.raises(TreeError):
        GallaiTree([None, 0, 0, 0], {(1, 2): 0, (1, 3): 1, (2, 3): 2}, {1: 0, 2: 1, 3: 2})


@settings(max_examples=200, deadline=None)
@given(cliques(min_n=2, max_n=8, max_colors=4))
def test_decomposition_properties(K):
    if not is_gallai(K):
        with pytest.raises(NotGallaiError):
            decompose(K)
        return
    T = decompose(K)
    assert recompose(T) == K
    for t in T.internal_nodes():
        fac, _ = T.factor(t)
        assert fac.k <= 2 and is_irreducible(fac)
    P = homogeneous_2_partition(K)
    assert len(P.blocks) >= 2 and len(P.delta) <= 2 and P.is_homogeneous(K)
    for b in P.blocks:
        assert is_module(K, b)


def test_random_tree_cliques_roundtrip():
    rng = random.Random(3)
    for _ in range(100):
        K = random_tree_2_clique(rng, rng.randint(1, 12))
        assert is_gallai(K)
        if K.n > 1:
            assert recompose(decompose(K)) == K


def test_theorem4_examples():
    rep = check_theorem4(ColoredClique.rainbow(3))
    assert not rep.subset_ok and rep.subset_witness == (0, 1, 2)
    for n in range(2, 7):
        assert check_theorem4(ColoredClique.monochromatic(n)).ok
    K = simple_clique(5)
    for b in combinations(range(5), 3):
        assert len(colors_between(K, b, b)) == 2
    assert check_theorem4(K).ok


@settings(max_examples=150, deadline=None)
@given(cliques(min_n=1, max_n=7, max_colors=5))
def test_theorem4_matches_literal_check(K):
    rep = check_theorem4(K)
    assert rep.exhaustive
    assert (rep.disjoint_ok, rep.subset_ok) == literal_theorem4(K)
    assert rep.ok == is_gallai(K)


def test_theorem4_sampled_mode():
    rng = random.Random(5)
    K = random_tree_2_clique(rng, 18)
    rep = check_theorem4(K)
    assert not rep.exhaustive and rep.ok
    bad = np.array(K.color)
    bad[0, 1] = bad[1, 0] = K.k
    bad[0, 2] = bad[2, 0] = K.k + 1
    rep = check_theorem4(ColoredClique.tightened(bad))
    assert not rep.ok


def test_exact_structure_agrees_with_triangle_scan():
    for n in (2, 3, 4):
        for K in restricted_growth_colorings(n):
            assert verify_exact_structure(K) == is_exact_gallai(K)


@settings(max_examples=200, deadline=None)
@given(cliques(min_n=2, max_n=7, max_colors=3))
def test_exact_structure_random(K):
    assert verify_exact_structure(K) == is_exact_gallai(K)


def test_random_exact_cliques_are_exact():
    rng = random.Random(2)
    for _ in range(40):
        K = random_exact_gallai(rng, rng.randint(2, 30))
        assert is_exact_gallai(K) and verify_exact_structure(K)


def test_max_order():
    assert [max_exact_gallai_order(k) for k in (1, 2, 3)] == [2, 5, 10]
    for k in range(1, 6):
        K = extremal_exact_gallai(k)
        assert K.n == max_exact_gallai_order(k) and K.k == k and is_exact_gallai(K)
