import numpy as np
import pytest
from hypothesis import strategies as st

from gallaikit import ColoredClique


@st.composite
def cliques(draw, min_n=1, max_n=7, max_colors=5):
    n = draw(st.integers(min_n, max_n))
    colors = draw(st.integers(1, max_colors))
    mat = np.full((n, n), -1, dtype=np.int64)
    for u in range(n):
        for v in range(u + 1, n):
            mat[u, v] = mat[v, u] = draw(st.integers(0, colors - 1))
    if n == 1:
        return ColoredClique(mat, 0)
    return ColoredClique.tightened(mat)


@pytest.fixture
def block_k4():
    # blocks {0,1} and {2,3} with inner colors 2 and 3, cross color 4; palette tightened
    mat = np.array([[-1, 2, 4, 4], [2, -1, 4, 4], [4, 4, -1, 3], [4, 4, 3, -1]])
    return ColoredClique.tightened(mat)
