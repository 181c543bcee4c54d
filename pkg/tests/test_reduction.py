"""Reduction of nongraphic clique extensions to canonical family minors."""

import itertools

import pytest

from matroidkit import (
    DomainError,
    PreconditionError,
    ReductionDidNotClose,
    clique,
    direct_sum,
    free_ext_clique,
    principal_extension,
    reduce_clique_extension,
    square_ext,
    triangle_ext,
    uniform,
    validate_certificate,
)


CANONICAL = [
    ("triangle", triangle_ext(6), "triangle_ext(4)"),
    ("square", square_ext(6), "square_ext(5)"),
    ("free", free_ext_clique(8), "free_ext_clique(4)"),
]


@pytest.mark.parametrize("kind,host,want", CANONICAL,
                         ids=[c[0] for c in CANONICAL])
def test_canonical_reductions_close(kind, host, want):
    res = reduce_clique_extension(host, host.size - 1, 4)
    assert res.kind == kind
    assert res.target.name == want
    assert res.m == 4
    assert validate_certificate(res.certificate, host, res.target)
    events = [ev["event"] for ev in res.transcript]
    assert events[0] == "minimal-flats"
    assert events[-1] == "leaf"
    assert res.transcript[-1]["validated"] is True


@pytest.mark.parametrize("n", [5, 6])
def test_matching_point_reduces_through_a_merge(n):
    # a point on a two-edge matching flat: one cross-edge contraction turns
    # the matching into a triangle, and the triangle leaf closes
    prs = list(itertools.combinations(range(n), 2))
    host = principal_extension(clique(n), [prs.index((0, 1)),
                                           prs.index((2, 3))])
    res = reduce_clique_extension(host, host.size - 1, 4)
    assert res.kind == "triangle"
    assert res.target.name == "triangle_ext(4)"
    assert validate_certificate(res.certificate, host, res.target)
    events = [ev["event"] for ev in res.transcript]
    assert "contract" in events
    assert res.certificate.contract  # at least one element was contracted


def test_reduction_is_deterministic():
    host = triangle_ext(6)
    a = reduce_clique_extension(host, host.size - 1, 4)
    b = reduce_clique_extension(host, host.size - 1, 4)
    assert a.transcript == b.transcript
    assert a.certificate.mapping == b.certificate.mapping
    assert a.certificate.contract == b.certificate.contract
    assert a.certificate.delete == b.certificate.delete


def test_reduction_reports_honest_failure_with_transcript():
    host = triangle_ext(5)
    with pytest.raises(ReductionDidNotClose) as info:
        reduce_clique_extension(host, host.size - 1, 6)
    transcript = info.value.transcript
    assert transcript, "a failed run still carries its transcript"
    events = [ev["event"] for ev in transcript]
    assert events[0] == "minimal-flats"
    assert events[-1] == "dead-end"


def test_reduction_argument_guards():
    host = triangle_ext(6)
    with pytest.raises(DomainError):
        reduce_clique_extension(host, host.size - 1, 3)
    with pytest.raises(DomainError):
        reduce_clique_extension(host, host.size, 4)


def test_reduction_position_preconditions():
    loopy = direct_sum(clique(4), uniform(0, 1))
    with pytest.raises(PreconditionError):
        reduce_clique_extension(loopy, 6, 4)

    colo = direct_sum(clique(4), uniform(1, 1))
    with pytest.raises(PreconditionError):
        reduce_clique_extension(colo, 6, 4)

    prs = list(itertools.combinations(range(4), 2))
    doubled = principal_extension(clique(4), [prs.index((0, 1))])
    with pytest.raises(PreconditionError):
        reduce_clique_extension(doubled, 6, 4)


def test_reduction_rejects_non_clique_base():
    host = principal_extension(uniform(3, 6), [0, 1])
    with pytest.raises((DomainError, PreconditionError)):
        reduce_clique_extension(host, host.size - 1, 4)
