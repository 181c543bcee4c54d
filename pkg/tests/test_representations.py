import pytest

from matroidkit import is_isomorphic, simplify
from matroidkit.constructions import (
    n_square,
    n_square_even_cycle_rep,
    n_triangle,
    n_triangle_signed_rep,
)
from matroidkit.errors import DomainError, GroundSetError
from matroidkit.representations import (
    EvenCycleRep,
    GraphRep,
    SignedGraphRep,
    from_graph,
    from_matrix,
    has_blocking_pair,
)
from oracles import gf_rank, graph_rank


def _parity_components(n, edges, odd, mask):
    """Union-find with edge parity. Returns (merges, unbalanced roots)."""
    parent = list(range(n))
    par = [0] * n
    unbalanced = set()

    def find(x):
        p = 0
        while parent[x] != x:
            p ^= par[x]
            x = parent[x]
        return x, p

    merges = 0
    for i, (u, v) in enumerate(edges):
        if not (mask >> i) & 1:
            continue
        w = 1 if i in odd else 0
        ru, pu = find(u)
        rv, pv = find(v)
        if ru == rv:
            if pu ^ pv ^ w:
                unbalanced.add(ru)
        else:
            parent[ru] = rv
            par[ru] = pu ^ pv ^ w
            merges += 1
            if ru in unbalanced:
                unbalanced.discard(ru)
                unbalanced.add(rv)
    roots = {find(x)[0] for x in range(n)}
    return merges, {r for r in roots if find(r)[0] in unbalanced}


def lift_rank(rep, mask):
    merges, unb = _parity_components(rep.n_vertices, rep.edges, rep.odd, mask)
    return merges + (1 if unb else 0)


def frame_rank(rep, mask):
    merges, unb = _parity_components(rep.n_vertices, rep.edges, rep.odd, mask)
    return merges + len(unb)


def test_from_matrix_rank_agrees_with_elimination():
    rows2 = [[1, 0, 1, 1, 0, 1],
             [0, 1, 1, 0, 1, 1],
             [0, 0, 0, 1, 1, 1]]
    rows3 = [[1, 0, 0, 1, 1, 0, 2],
             [0, 1, 0, 1, 2, 1, 0],
             [0, 0, 1, 0, 1, 2, 1]]
    for rows, p in ((rows2, 2), (rows3, 3)):
        m = from_matrix(rows, p)
        cols = [[row[j] for row in rows] for j in range(len(rows[0]))]
        for mask in range(1 << m.size):
            sel = [cols[j] for j in range(m.size) if (mask >> j) & 1]
            assert m.r(mask) == gf_rank(sel, p)


def test_from_matrix_rejects_bad_prime():
    with pytest.raises(DomainError):
        from_matrix([[1, 0]], 4)


def test_from_graph_rank_is_spanning_forest_size():
    nv, edges = 5, [(0, 1), (1, 2), (2, 0), (3, 3), (3, 4), (3, 4), (0, 4)]
    m = from_graph(nv, edges)
    for mask in range(1 << m.size):
        assert m.r(mask) == graph_rank(nv, edges, mask)


def test_from_graph_rejects_bad_endpoint():
    with pytest.raises(GroundSetError):
        from_graph(2, [(0, 5)])


def test_even_cycle_rank_is_lift_formula():
    # triangle with one odd edge, an odd loop, an even loop, a doubled edge
    rep = EvenCycleRep(3, ((0, 1), (1, 2), (2, 0), (0, 0), (1, 1), (0, 1)),
                       frozenset({0, 3, 5}))
    m = rep.matroid()
    for mask in range(1 << m.size):
        assert m.r(mask) == lift_rank(rep, mask)
    big = n_square_even_cycle_rep(4)
    mb = big.matroid()
    for mask in range(1 << mb.size):
        assert mb.r(mask) == lift_rank(big, mask)


def test_signed_graph_rank_is_frame_formula():
    # two components that can be unbalanced independently
    rep = SignedGraphRep(4, ((0, 1), (0, 1), (2, 3), (2, 2), (3, 3)),
                         frozenset({1, 3}))
    m = rep.matroid()
    for mask in range(1 << m.size):
        assert m.r(mask) == frame_rank(rep, mask)
    big = n_triangle_signed_rep(3)
    mb = big.matroid()
    for mask in range(1 << mb.size):
        assert mb.r(mask) == frame_rank(big, mask)


def test_decorated_reps_realize_the_contracted_families():
    a = n_square_even_cycle_rep(3).matroid()
    assert is_isomorphic(a, simplify(n_square(3))[0]) is not None
    b = n_triangle_signed_rep(3).matroid()
    assert is_isomorphic(b, simplify(n_triangle(3))[0]) is not None


def test_blocking_pair_found_and_absent():
    assert has_blocking_pair(n_square_even_cycle_rep(4)) == (0, 1)
    # three vertex-disjoint odd edges cannot be covered by two vertices
    rep = EvenCycleRep(6, ((0, 1), (2, 3), (4, 5)), frozenset({0, 1, 2}))
    assert has_blocking_pair(rep) is None
    # signed variant with a coverable odd set
    srep = SignedGraphRep(4, ((0, 1), (0, 2), (0, 3)), frozenset({0, 1, 2}))
    assert has_blocking_pair(srep) == (0, 1)


def test_blocking_pair_needs_decorated_graph():
    with pytest.raises(DomainError):
        has_blocking_pair(GraphRep(3, ((0, 1), (1, 2))))
