import pytest

from matroidkit import (
    Matroid,
    clique,
    direct_sum,
    dual,
    epsilon,
    fano,
    has_minor,
    kung_bound_check,
    minor_with_map,
    simplify,
    uniform,
)
from matroidkit.core import (
    MinorCertificate,
    circuits,
    closure,
    loops_mask,
    parallel_classes,
    rank_table,
    same_rank_function,
    validate_certificate,
    validate_rank_axioms,
)
from matroidkit.errors import (
    DomainError,
    GroundSetError,
    PreconditionError,
    ResourceLimitError,
)
from oracles import eps_oracle

from matroidkit.constructions import n_square, spike, triangle_ext


def popcount_rank(cap):
    # free matroid: rank is cardinality
    return lambda mask: bin(mask).count("1")


def test_matroid_basics():
    m = Matroid(3, popcount_rank(3), validate=True)
    assert m.size == 3
    assert m.full_mask == 0b111
    assert m.full_rank() == 3
    assert m.rank([0, 2]) == 2
    assert m.rank() == 3
    with pytest.raises(GroundSetError):
        m.mask([5])


def test_rank_is_memoized_and_method_not_attribute():
    calls = []

    def fn(mask):
        calls.append(mask)
        return bin(mask).count("1")

    m = Matroid(4, fn)
    m.r(0b1010)
    m.r(0b1010)
    assert calls.count(0b1010) == 1
    assert callable(m.full_rank)


def test_loops_and_parallel_classes():
    # rank table of U_{1,2} plus a loop: element 2 is the loop
    def fn(mask):
        return 1 if mask & 0b011 else 0

    m = Matroid(3, fn)
    assert loops_mask(m) == 0b100
    assert parallel_classes(m) == [(0, 1)]


def test_simplify_keeps_one_per_class():
    m = uniform(1, 3)
    si, mapping = simplify(m)
    assert si.size == 1
    assert si.full_rank() == 1
    assert mapping[0] == 0 and mapping[1] == 0 and mapping[2] == 0


def test_epsilon_matches_rank_one_flat_count():
    for m in (fano(), clique(4), uniform(2, 5), n_square(3), spike(3)):
        assert epsilon(m) == eps_oracle(m)


def test_closure_and_circuits_on_triangle():
    m = clique(3)
    assert closure(m, [0, 1]) == frozenset({0, 1, 2})
    assert circuits(m) == [frozenset({0, 1, 2})]


def test_minor_with_map_contract_then_delete():
    m = clique(4)  # edges 01,02,03,12,13,23
    n, keep = minor_with_map(m, [0], [5])
    assert n.size == 4
    assert keep == (1, 2, 3, 4)
    # contracting edge 01 makes edges 02 and 12 parallel
    assert n.r((1 << 0) | (1 << 2)) == 1


def test_dual_rank_formula_and_involution():
    m = fano()
    d = dual(m)
    assert d.full_rank() == m.size - m.full_rank()
    assert same_rank_function(dual(d), m)


def test_direct_sum_adds_ranks():
    s = direct_sum(uniform(2, 3), uniform(1, 2))
    assert s.size == 5
    assert s.full_rank() == 3
    assert s.r(s.mask([0, 1, 3])) == 3


def test_same_rank_function_detects_difference():
    assert same_rank_function(uniform(2, 4), uniform(2, 4))
    assert not same_rank_function(uniform(2, 4), clique(4))


def test_validate_rank_axioms_rejects_bad_oracle():
    validate_rank_axioms(uniform(2, 4))

    def not_submodular(mask):
        # rank 2 only on the full set: violates unit increase pattern
        return 2 if mask == 0b111 else (1 if mask else 0)

    with pytest.raises(PreconditionError):
        validate_rank_axioms(Matroid(3, not_submodular))
    with pytest.raises(ResourceLimitError):
        validate_rank_axioms(clique(7))


def test_rank_table_agrees_with_oracle():
    m = fano()
    table = rank_table(m)
    assert len(table) == 1 << 7
    assert all(int(table[mask]) == m.r(mask) for mask in range(1 << 7))


def test_certificate_validation_and_tampering():
    host = clique(4)
    cert = has_minor(host, uniform(2, 3))
    assert cert is not None
    assert validate_certificate(cert, host, uniform(2, 3))
    # same data against the wrong target must fail
    assert not validate_certificate(cert, host, uniform(1, 3))
    bad = MinorCertificate(cert.contract, cert.delete,
                           tuple((t, h) for t, h in cert.mapping)[:-1])
    assert not validate_certificate(bad, host, uniform(2, 3))


def test_certificate_exhaustive_limit():
    host = clique(6)
    cert = MinorCertificate(frozenset(), frozenset(),
                            tuple((i, i) for i in range(host.size)))
    with pytest.raises(ResourceLimitError):
        validate_certificate(cert, host, host, exhaustive_limit=10)


def test_kung_bound_tight_on_fano():
    rep = kung_bound_check(fano(), 2, check_minor=True)
    assert rep.holds and rep.tight
    assert rep.bound == 7 and rep.epsilon == 7


def test_kung_bound_strict_on_graphic():
    rep = kung_bound_check(clique(5), 2)
    assert rep.holds and not rep.tight
    assert rep.bound == 2 ** 4 - 1


def test_kung_check_minor_rejects_long_line():
    with pytest.raises(PreconditionError):
        kung_bound_check(triangle_ext(4), 2, check_minor=True)


def test_kung_line_bound_domain():
    with pytest.raises(DomainError):
        kung_bound_check(fano(), 1)
