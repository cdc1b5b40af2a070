import random

import pytest
from hypothesis import given

from gallaikit import ColoredClique, SimpleGraph, decompose, named_graph
from gallaikit.constructions import random_tree_2_clique
from gallaikit.io import FormatError, dumps_cgr, dumps_gt, dumps_ug, loads_cgr, loads_gt, loads_ug, read_cgr, write_cgr

from conftest import cliques


@given(cliques(max_n=8))
def test_cgr_roundtrip(K):
    assert loads_cgr(dumps_cgr(K)) == K
    assert dumps_cgr(loads_cgr(dumps_cgr(K))) == dumps_cgr(K)


def test_ug_roundtrip():
    for G in (named_graph("A"), named_graph("C", 5), SimpleGraph(3, [])):
        assert loads_ug(dumps_ug(G)) == G


def test_gt_roundtrip():
    rng = random.Random(1)
    for _ in range(30):
        T = decompose(random_tree_2_clique(rng, rng.randint(2, 10)))
        text = dumps_gt(T)
        assert dumps_gt(loads_gt(text)) == text


def test_file_roundtrip(tmp_path):
    K = ColoredClique.rainbow(4)
    p = tmp_path / "k.cgr"
    write_cgr(K, p)
    assert read_cgr(p) == K


@pytest.mark.parametrize(
    "text",
    [
        "",
        "nonsense 3 1\n",
        "cgraph 3 1\n0 1 0\n0 2 0\n",
        "cgraph 2 1\n0 1 x\n",
        "cgraph 2 2\n0 1 0\n",
        "cgraph 2 1\n0 1 0\n0 1 0\n",
        "cgraph 2 1\n1 0 0\n",
    ],
)
def test_bad_cgr_rejected(text):
    with pytest.raises(FormatError):
        loads_cgr(text)


def test_bad_ug_and_gt_rejected():
    with pytest.raises(FormatError):
        loads_ug("graph 2 1\n0 5\n")
    with pytest.raises(FormatError):
        loads_gt("gtree 1\n")
