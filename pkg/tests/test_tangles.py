"""Tangle families, axiom checking, tangle matroids, induced tangles."""

import pytest

from matroidkit import (
    DomainError,
    ResourceLimitError,
    Tangle,
    clique,
    clique_minor_tangle,
    direct_sum,
    find_clique_minor,
    is_tangle,
    tangle_matroid,
    tangle_rank,
    tangle_tk,
    uniform,
    validate_rank_axioms,
)
from matroidkit.tangles import TangleCheck, tangle_rank_mask


# maximal-member counts of T_k(M(K_n)) at the clique tangle order
# k = ceil(2(n-1)/3); frozen from an exhaustive 2^|E| sweep.
TK_MAXIMAL_COUNTS = {
    (4, 2): 1,
    (5, 3): 10,
    (6, 4): 65,
}


@pytest.mark.parametrize("n,k", sorted(TK_MAXIMAL_COUNTS))
def test_tk_clique_maximal_counts(n, k):
    t = tangle_tk(clique(n), k)
    assert isinstance(t, Tangle)
    assert t.theta == k
    assert len(t.maximal) == TK_MAXIMAL_COUNTS[(n, k)]
    # re-verify the axioms through the public checker
    assert is_tangle(clique_t := t.matroid, t, k).ok
    assert clique_t.size == n * (n - 1) // 2


def test_t3_of_k4_is_the_six_singletons():
    t = tangle_tk(clique(4), 3)
    assert isinstance(t, Tangle)
    assert t.maximal == tuple(1 << e for e in range(6))
    assert t.is_small(1 << 2)
    assert not t.is_small(0b11)  # a pair of edges is 2-separating


def test_tk_can_fail_axiom_two():
    # three disjoint parallel pairs: the 0-separating block unions give
    # three members covering the ground set
    m = direct_sum(direct_sum(uniform(1, 2), uniform(1, 2)), uniform(1, 2))
    verdict = tangle_tk(m, 2)
    assert isinstance(verdict, TangleCheck)
    assert not verdict.ok
    assert verdict.axiom == 2
    a, b, c = verdict.witness
    assert a | b | c == m.full_mask


def test_is_tangle_axiom_three_witness():
    m = clique(4)
    t = tangle_tk(m, 3)
    members = [x for x in range(1 << m.size) if t.is_small(x)]
    bad = m.full_mask ^ 1  # E minus one element is 1-separating here
    verdict = is_tangle(m, members + [bad], 3)
    assert verdict.axiom == 3
    assert verdict.witness == (bad,)


def test_is_tangle_axiom_one_witnesses():
    m = clique(4)
    triangle = 0b1011  # lambda = 2, so not small at order 3
    verdict = is_tangle(m, [0, triangle], 3)
    assert (verdict.ok, verdict.axiom, verdict.witness) == (False, 1, (triangle,))
    # the empty family misses the empty set (or its complement)
    verdict = is_tangle(m, [], 3)
    assert (verdict.axiom, verdict.witness) == (1, (0,))


def test_is_tangle_rejects_foreign_tangle_and_bad_masks():
    m = clique(4)
    t = tangle_tk(m, 2)
    with pytest.raises(DomainError):
        is_tangle(clique(4), t, 2)  # fresh object, not t.matroid
    with pytest.raises(DomainError):
        is_tangle(m, [1 << 10], 2)


def test_tangle_order_and_size_limits():
    with pytest.raises(DomainError):
        tangle_tk(clique(4), 0)
    with pytest.raises(ResourceLimitError):
        tangle_tk(clique(8), 4)  # 28 elements, above the sweep cap
    with pytest.raises(ResourceLimitError):
        is_tangle(clique(8), [], 2)


def test_tangle_rank_endpoints_and_matroid():
    t = tangle_tk(clique(5), 3)
    m = t.matroid
    assert tangle_rank_mask(t, 0) == 0
    assert tangle_rank_mask(t, m.full_mask) == t.theta - 1
    assert tangle_rank(t, [0]) <= t.theta - 1

    tm = tangle_matroid(t)  # n = 10 <= 12, validated on construction
    assert tm.size == m.size
    assert tm.rank() == t.theta - 1
    validate_rank_axioms(tm, cap=tm.size)


def test_clique_minor_tangle_on_host():
    host = clique(5)
    cert = find_clique_minor(host, 3)
    assert cert is not None
    t = clique_minor_tangle(host, cert, 3)
    assert t.matroid is host
    assert t.theta == 2
    assert is_tangle(host, t, t.theta).ok
    with pytest.raises(DomainError):
        clique_minor_tangle(host, cert, 1)
