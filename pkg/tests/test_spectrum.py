from itertools import combinations

import pytest
from hypothesis import given, settings

from gallaikit import (
    ColoredClique,
    Spectrum,
    Status,
    check_spectrum_laws,
    even_gon_no_preceding,
    find_colorful_cycle,
    has_colorful_cycle,
    is_colorful,
    monoid_closure,
    odd_gon_no_squares,
    search_coloring,
    spectrum,
)
from gallaikit.oracles import naive_colorful_lengths, plain_search, restricted_growth_colorings

from conftest import cliques


def test_find_colorful_cycle_examples():
    cyc = find_colorful_cycle(ColoredClique.rainbow(3), 3)
    assert tuple(cyc) == (0, 1, 2)
    assert not has_colorful_cycle(odd_gon_no_squares(5), 4)
    K6 = even_gon_no_preceding(3)
    assert not has_colorful_cycle(K6, 5)
    assert has_colorful_cycle(K6, 6)


def test_spectrum_examples():
    assert spectrum(ColoredClique.monochromatic(4)) == Spectrum((), 2)
    assert str(spectrum(ColoredClique.monochromatic(4))) == "spectrum exceptions=[] solid_from=2"
    assert str(spectrum(ColoredClique.rainbow(3))) == "spectrum exceptions=[3] solid_from=4"
    S = spectrum(odd_gon_no_squares(5))
    assert S.exceptions == {3, 5} and S.solid_from == 6
    assert naive_colorful_lengths(odd_gon_no_squares(5)) == {3, 5}


def test_monoid_closure_examples():
    assert monoid_closure({4}, 12) == {2, 4, 6, 8, 10, 12}
    assert monoid_closure({3}, 6) == {2, 3, 4, 5, 6}
    assert monoid_closure(set(), 5) == {2}


def test_spectrum_law_examples():
    assert check_spectrum_laws(Spectrum({3}, 4))
    assert not check_spectrum_laws(Spectrum({4}, 5))
    # contains 4 but misses 6: not closed
    assert not check_spectrum_laws(Spectrum({3, 6}))


def test_spectrum_rejects_bad_input():
    with pytest.raises(ValueError):
        Spectrum({2})
    with pytest.raises(ValueError):
        Spectrum({5}, 4)


@settings(max_examples=150, deadline=None)
@given(cliques(max_n=7, max_colors=7))
def test_dfs_matches_naive_enumeration(K):
    S = spectrum(K)
    assert set(S.exceptions) == naive_colorful_lengths(K)
    for L in S.exceptions:
        cyc = find_colorful_cycle(K, L)
        assert len(cyc) == L and is_colorful(K, cyc)


@settings(max_examples=150, deadline=None)
@given(cliques(max_n=8, max_colors=8))
def test_realized_spectra_obey_laws(K):
    S = spectrum(K)
    assert check_spectrum_laws(S)
    assert S.solid_from <= max(K.n, 2) + 1
    # closed under m o n, checked directly past the tail
    members = S.members(2 * S.solid_from)
    for a, b in combinations(members, 2):
        assert a + b - 2 in S


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_odd_gon(m):
    K = odd_gon_no_squares(m)
    assert K.k == m
    assert has_colorful_cycle(K, m) and not has_colorful_cycle(K, 4)
    if m <= 7:
        assert spectrum(K).exceptions == set(range(3, m + 1, 2))


@pytest.mark.parametrize("m", [3, 4, 5])
def test_even_gon(m):
    K = even_gon_no_preceding(m)
    assert K.k == 2 * m
    assert has_colorful_cycle(K, 2 * m) and not has_colorful_cycle(K, 2 * m - 1)


def test_search_examples():
    assert search_coloring(4, {3}, 4).status is Status.UNSAT
    res = search_coloring(6, {5}, 6)
    assert res.status is Status.SAT
    assert has_colorful_cycle(res.witness, 6) and not has_colorful_cycle(res.witness, 5)
    assert str(search_coloring(4, {3}, 4)).startswith("UNSAT nodes=")


def test_search_argument_errors():
    with pytest.raises(ValueError):
        search_coloring(5, {5}, 5)
    with pytest.raises(ValueError):
        search_coloring(4, {3}, 6)


def test_search_budget_gives_timeout():
    res = search_coloring(9, {5}, 9, budget=3)
    assert res.status is Status.TIMEOUT and res.nodes == 4
    assert search_coloring(9, {5}, 9, budget=None).status is Status.UNSAT


def _exhaustive_answer(realized, forbidden, required):
    return any(required in lengths and not (lengths & forbidden) for lengths in realized)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_search_agrees_with_exhaustive_enumeration(n):
    # every set of colorful lengths realized by some coloring of K_n
    realized = {frozenset(naive_colorful_lengths(K)) for K in restricted_growth_colorings(n)}
    lengths = list(range(3, n + 1))
    for required in lengths:
        others = [L for L in lengths if L != required]
        for r in range(len(others) + 1):
            for forbidden in combinations(others, r):
                res = search_coloring(n, set(forbidden), required)
                expect = _exhaustive_answer(realized, set(forbidden), required)
                assert (res.status is Status.SAT) == expect, (n, forbidden, required)
                if res.witness is not None:
                    got = naive_colorful_lengths(res.witness)
                    assert required in got and not (got & set(forbidden))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_search_agrees_with_propagation_free_search(n):
    lengths = list(range(3, n + 1))
    for required in lengths:
        others = [L for L in lengths if L != required]
        for r in range(len(others) + 1):
            for forbidden in combinations(others, r):
                res = search_coloring(n, set(forbidden), required)
                assert (res.status is Status.SAT) == plain_search(n, forbidden, required), (n, forbidden, required)


def test_small_decagon_relatives_agree():
    for n in (7, 8):
        assert (search_coloring(n, {5}, n).status is Status.SAT) == plain_search(n, {5}, n)
