import random

import pytest

from matroidkit.representations import from_graph, from_matrix


def random_linear(rng: random.Random, max_rows: int = 4, max_cols: int = 8,
                  min_cols: int = 2):
    p = rng.choice((2, 3))
    r = rng.randint(2, max_rows)
    n = rng.randint(max(r, min_cols), max_cols)
    rows = [[rng.randrange(p) for _ in range(n)] for _ in range(r)]
    return from_matrix(rows, p)


def random_graph(rng: random.Random, max_vertices: int = 5,
                 max_edges: int = 8):
    nv = rng.randint(2, max_vertices)
    ne = rng.randint(1, max_edges)
    edges = [(rng.randrange(nv), rng.randrange(nv)) for _ in range(ne)]
    return from_graph(nv, edges)


@pytest.fixture
def rng():
    return random.Random(20260814)
