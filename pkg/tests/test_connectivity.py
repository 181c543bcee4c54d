import random

import pytest

from matroidkit import clique, direct_sum, uniform
from matroidkit.connectivity import (
    SeparationCertificate,
    connectivity,
    flats,
    is_modular_flat,
    is_modular_pair,
    is_vertically_k_connected,
    kappa,
    linking_minor,
    local_conn,
)
from matroidkit.core import closure_mask, validate_certificate
from matroidkit.errors import DomainError
from conftest import random_linear
from oracles import kappa_brute, lam


def test_lambda_zero_exactly_on_sum_separators():
    s = direct_sum(uniform(2, 3), uniform(2, 3))
    assert connectivity(s, [0, 1, 2]) == 0
    assert connectivity(s, [0, 1]) == 1
    assert connectivity(s, []) == 0


def test_local_conn_skew_and_overlap():
    m = clique(4)
    assert local_conn(m, [0], [5]) == 0          # disjoint edges are skew
    assert local_conn(m, [0, 1], [1, 3]) >= 1


def test_kappa_frozen_triangles_of_k6():
    # triangles on {0,1,2} and {3,4,5}: three vertex-disjoint paths exist,
    # but lambda of any separating side is pinned at 2
    m = clique(6)
    value, cert = kappa(m, [0, 1, 5], [12, 13, 14])
    assert value == 2
    assert kappa_brute(m, [0, 1, 5], [12, 13, 14]) == 2
    side = m.mask(cert.side)
    assert side & m.mask([12, 13, 14]) == 0
    assert side | m.mask([0, 1, 5]) == side
    assert lam(m, side) == 2


def test_kappa_matches_brute_on_random_linear(rng: random.Random):
    for _ in range(25):
        m = random_linear(rng, max_rows=3, max_cols=7, min_cols=5)
        els = list(range(m.size))
        xs = sorted(rng.sample(els, 2))
        rest = [e for e in els if e not in xs]
        ys = sorted(rng.sample(rest, 2))
        value, cert = kappa(m, xs, ys)
        assert value == kappa_brute(m, xs, ys)
        assert lam(m, m.mask(cert.side)) == value


def test_kappa_rejects_overlap():
    with pytest.raises(DomainError):
        kappa(clique(4), [0, 1], [1, 2])


def test_linking_minor_certifies_kappa(rng: random.Random):
    for _ in range(10):
        m = random_linear(rng, max_rows=3, max_cols=7, min_cols=5)
        els = list(range(m.size))
        xs = sorted(rng.sample(els, 2))
        rest = [e for e in els if e not in xs]
        ys = sorted(rng.sample(rest, 2))
        value, _ = kappa(m, xs, ys)
        n, cert = linking_minor(m, xs, ys)
        assert validate_certificate(cert, m, n)
        inv = {h: t for t, h in cert.mapping}
        ximg = 0
        for e in xs:
            ximg |= 1 << inv[e]
        assert lam(n, ximg) == value
        for e in xs + ys:  # restrictions survive on both sides
            assert n.r(1 << inv[e]) == m.r(1 << e)


def test_flats_of_small_cliques_count_vertex_partitions():
    # flats of a graphic clique correspond to vertex partitions
    bell = {3: 5, 4: 15}
    for n, count in bell.items():
        fs = flats(clique(n))
        assert len(fs) == count
        for f in fs:
            assert closure_mask(clique(n), f) == f


def test_modular_flats_in_clique():
    m = clique(4)
    triangle = [0, 1, 3]   # edges 01, 02, 12
    matching = [0, 5]      # edges 01, 23
    assert is_modular_flat(m, triangle)
    assert not is_modular_flat(m, matching)
    assert is_modular_pair(m, triangle, [5])
    with pytest.raises(DomainError):
        is_modular_flat(m, [0, 1])  # not closed


def test_vertical_connectivity_verdicts():
    assert is_vertically_k_connected(clique(5), 4) is True
    refuted = is_vertically_k_connected(direct_sum(clique(3), clique(3)), 2)
    assert isinstance(refuted, SeparationCertificate)
    assert refuted.value == 0
    assert refuted.kind == "vertical-separation"
    with pytest.raises(DomainError):
        is_vertically_k_connected(clique(4), 1)
