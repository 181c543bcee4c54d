"""Rank-oracle matroids over dense integer ground sets.

A matroid is a ground set {0..n-1} plus a rank function. Subsets travel as
bitmasks (ints); every derived query (closure, minors, duality, simplification)
is phrased against the rank oracle, so anything that can answer rank questions
plugs into the rest of the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from ._bits import bits, elements_of, mask_of, popcount
from .errors import (
    DomainError,
    GroundSetError,
    PreconditionError,
    ResourceLimitError,
)

GROUND_SET_CAP = 64

# Memo entries per matroid; beyond this, rank queries stop caching.
_CACHE_LIMIT = 1 << 20

# Exhaustive subset sweeps (rank tables, axiom checks) refuse above this.
TABLE_CAP = 22


@dataclass(frozen=True)
class GroundSet:
    """Dense element ids 0..size-1 with optional display labels."""

    size: int
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.size < 0 or self.size > GROUND_SET_CAP:
            raise GroundSetError(
                f"ground set size {self.size} outside [0, {GROUND_SET_CAP}]"
            )
        if self.labels is not None and len(self.labels) != self.size:
            raise GroundSetError("labels length must equal ground set size")

    def label(self, e: int) -> str:
        if self.labels is not None:
            return self.labels[e]
        return str(e)


@dataclass(frozen=True)
class Recipe:
    """Provenance node for oracle-built matroids (transformers, families).

    args holds operand matroids; params holds plain data (ints, tuples).
    Serialization walks this tree.
    """

    op: str
    args: tuple = ()
    params: dict = field(default_factory=dict)


class Matroid:
    """A matroid given by a rank oracle on bitmask subsets.

    rank_mask(mask) must satisfy the rank axioms; construction can verify
    them exhaustively for small ground sets via validate=True.
    """

    __slots__ = ("ground", "full_mask", "_rank_mask", "_cache", "_full_rank",
                 "provenance", "name")

    def __init__(self, ground, rank_mask: Callable[[int], int],
                 provenance=None, name: str = "", validate: bool = False):
        if isinstance(ground, int):
            ground = GroundSet(ground)
        self.ground = ground
        self.full_mask = (1 << ground.size) - 1
        self._rank_mask = rank_mask
        self._cache: dict[int, int] = {}
        self._full_rank: Optional[int] = None
        self.provenance = provenance
        self.name = name
        if validate:
            validate_rank_axioms(self)

    @property
    def size(self) -> int:
        return self.ground.size

    def r(self, mask: int) -> int:
        """Rank of a bitmask subset. Memoized."""
        cache = self._cache
        v = cache.get(mask)
        if v is None:
            v = self._rank_mask(mask)
            if len(cache) < _CACHE_LIMIT:
                cache[mask] = v
        return v

    def rank(self, subset: Optional[Iterable[int]] = None) -> int:
        if subset is None:
            return self.full_rank()
        return self.r(self.mask(subset))

    def full_rank(self) -> int:
        if self._full_rank is None:
            self._full_rank = self.r(self.full_mask)
        return self._full_rank

    def mask(self, elements: Iterable[int]) -> int:
        m = mask_of(elements)
        if m & ~self.full_mask:
            raise GroundSetError(
                f"elements {sorted(set(elements))} not within 0..{self.size - 1}"
            )
        return m

    def elements(self, mask: int) -> tuple[int, ...]:
        return elements_of(mask)

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Matroid{tag} n={self.size} r={self.full_rank()}>"


# ---------------------------------------------------------------------------
# basic queries


def rank(m: Matroid, subset: Iterable[int]) -> int:
    return m.r(m.mask(subset))


def independent(m: Matroid, subset: Iterable[int]) -> bool:
    mask = m.mask(subset)
    return m.r(mask) == popcount(mask)


def closure(m: Matroid, subset: Iterable[int]) -> frozenset[int]:
    mask = m.mask(subset)
    return frozenset(elements_of(closure_mask(m, mask)))


def closure_mask(m: Matroid, mask: int) -> int:
    r0 = m.r(mask)
    out = mask
    rest = m.full_mask & ~mask
    for e in bits(rest):
        if m.r(mask | (1 << e)) == r0:
            out |= 1 << e
    return out


def circuits(m: Matroid, bound: Optional[int] = None) -> list[frozenset[int]]:
    """All circuits of size <= bound, sorted by (size, elements).

    X is a circuit iff dependent with every one-element deletion independent.
    """
    n = m.size
    if bound is None:
        bound = n
        if n > 18:
            raise ResourceLimitError(
                f"unbounded circuit enumeration needs |E| <= 18, got {n}"
            )
    out = []
    for k in range(1, bound + 1):
        for combo in itertools.combinations(range(n), k):
            mask = mask_of(combo)
            if m.r(mask) >= k:
                continue
            if all(m.r(mask ^ (1 << e)) == k - 1 for e in combo):
                out.append(frozenset(combo))
    out.sort(key=lambda c: (len(c), sorted(c)))
    return out


def loops_mask(m: Matroid) -> int:
    out = 0
    for e in range(m.size):
        if m.r(1 << e) == 0:
            out |= 1 << e
    return out


def parallel_classes(m: Matroid) -> list[tuple[int, ...]]:
    """Parallel classes of nonloops, each sorted, list sorted by least element."""
    nonloops = [e for e in range(m.size) if m.r(1 << e) == 1]
    classes: list[list[int]] = []
    for e in nonloops:
        for cls in classes:
            if m.r((1 << cls[0]) | (1 << e)) == 1:
                cls.append(e)
                break
        else:
            classes.append([e])
    return [tuple(cls) for cls in classes]


def epsilon(m: Matroid) -> int:
    """Number of points (rank-1 flats): |si(M)|."""
    return len(parallel_classes(m))


# ---------------------------------------------------------------------------
# minors, duality, sums


def minor_with_map(m: Matroid, contract: Iterable[int], delete: Iterable[int],
                   name: str = "") -> tuple[Matroid, tuple[int, ...]]:
    """Minor m / contract \\ delete plus the kept-element map.

    Returns (N, keep) where N's element i corresponds to host element keep[i].
    """
    cmask = m.mask(contract)
    dmask = m.mask(delete)
    if cmask & dmask:
        raise DomainError("contract and delete sets overlap")
    keep = tuple(e for e in range(m.size) if not ((cmask | dmask) >> e) & 1)
    rc = m.r(cmask)

    def rank_mask(mask: int, _m=m, _keep=keep, _c=cmask, _rc=rc) -> int:
        host = _c
        for i in bits(mask):
            host |= 1 << _keep[i]
        return _m.r(host) - _rc

    prov = _minor_provenance(m, elements_of(cmask), elements_of(dmask))
    n = Matroid(len(keep), rank_mask, provenance=prov, name=name)
    return n, keep


def _minor_provenance(m: Matroid, contract: tuple[int, ...],
                      delete: tuple[int, ...]):
    prov = m.provenance
    rep = None
    if prov is not None and hasattr(prov, "minor_rep"):
        rep = prov.minor_rep(contract, delete)
    if rep is not None:
        return rep
    if prov is None:
        return None
    return Recipe("minor", args=(m,),
                  params={"contract": contract, "delete": delete})


def delete(m: Matroid, subset: Iterable[int]) -> Matroid:
    n, _ = minor_with_map(m, (), subset)
    return n

def contract(m: Matroid, subset: Iterable[int]) -> Matroid:
    n, _ = minor_with_map(m, subset, ())
    return n


def restriction(m: Matroid, subset: Iterable[int]) -> Matroid:
    keep = m.mask(subset)
    return delete(m, elements_of(m.full_mask & ~keep))


def dual(m: Matroid) -> Matroid:
    """Dual matroid: r*(X) = |X| + r(E-X) - r(E)."""
    full = m.full_mask
    rm = m.full_rank()

    def rank_mask(mask: int) -> int:
        return popcount(mask) + m.r(full & ~mask) - rm

    return Matroid(m.size, rank_mask, provenance=Recipe("dual", args=(m,)),
                   name=f"{m.name}*" if m.name else "")


def direct_sum(a: Matroid, b: Matroid) -> Matroid:
    na = a.size
    mask_a = a.full_mask

    def rank_mask(mask: int) -> int:
        return a.r(mask & mask_a) + b.r(mask >> na)

    return Matroid(na + b.size, rank_mask,
                   provenance=Recipe("direct-sum", args=(a, b)))


def simplify(m: Matroid) -> tuple[Matroid, dict[int, Optional[int]]]:
    """Simplification: drop loops, keep the least element of each parallel class.

    Returns (si, mapping) where mapping[e] is e's element in si (None for loops).
    """
    classes = parallel_classes(m)
    reps = sorted(cls[0] for cls in classes)
    rep_index = {e: i for i, e in enumerate(reps)}
    si, keep = minor_with_map(m, (), [e for e in range(m.size) if e not in rep_index])
    assert keep == tuple(reps)
    mapping: dict[int, Optional[int]] = {}
    loop_bits = loops_mask(m)
    for e in range(m.size):
        if (loop_bits >> e) & 1:
            mapping[e] = None
    for cls in classes:
        target = rep_index[cls[0]]
        for e in cls:
            mapping[e] = target
    si.name = f"si({m.name})" if m.name else ""
    return si, mapping


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class MinorCertificate:
    """Witness that a target matroid is a minor of a host.

    contract/delete are host elements; mapping pairs (target element, host
    element) cover exactly the remaining host elements.
    """

    contract: frozenset[int]
    delete: frozenset[int]
    mapping: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)

    def validate(self, host: Matroid, target: Matroid,
                 exhaustive_limit: int = 20) -> bool:
        return validate_certificate(self, host, target, exhaustive_limit)


def validate_certificate(cert: MinorCertificate, host: Matroid,
                         target: Matroid, exhaustive_limit: int = 20) -> bool:
    """Check a minor certificate by exhaustive rank agreement.

    Verifies the contract/delete/image partition of E(host) and that the
    target's rank function matches the contracted host on every subset.
    """
    cmask = host.mask(cert.contract)
    dmask = host.mask(cert.delete)
    pairs = dict(cert.mapping)
    if len(pairs) != target.size or set(pairs) != set(range(target.size)):
        return False
    image = mask_of(pairs.values())
    if popcount(image) != target.size:
        return False
    if cmask & dmask or cmask & image or dmask & image:
        return False
    if (cmask | dmask | image) != host.full_mask:
        return False
    if target.size > exhaustive_limit:
        raise ResourceLimitError(
            f"certificate validation is exhaustive; target has {target.size} "
            f"> {exhaustive_limit} elements"
        )
    host_bit = [0] * target.size
    for t, h in pairs.items():
        host_bit[t] = 1 << h
    rc = host.r(cmask)
    for mask in range(1 << target.size):
        hmask = cmask
        mm = mask
        while mm:
            low = mm & -mm
            hmask |= host_bit[low.bit_length() - 1]
            mm ^= low
        if host.r(hmask) - rc != target.r(mask):
            return False
    return True


# ---------------------------------------------------------------------------
# whole-matroid checks


def same_rank_function(a: Matroid, b: Matroid, cap: int = TABLE_CAP) -> bool:
    """Exact equality of rank functions (same ground set size)."""
    if a.size != b.size:
        return False
    if a.size > cap:
        raise ResourceLimitError(f"rank comparison needs |E| <= {cap}")
    for mask in range(1 << a.size):
        if a.r(mask) != b.r(mask):
            return False
    return True


def rank_table(m: Matroid, cap: int = TABLE_CAP) -> np.ndarray:
    """Rank of every subset, indexed by mask. uint8 array of length 2^n.

    Graph-backed matroids use a vectorized union-find sweep; anything else
    walks the oracle.
    """
    n = m.size
    if n > cap or n > TABLE_CAP:
        raise ResourceLimitError(
            f"rank table needs |E| <= {min(cap, TABLE_CAP)}, got {n}"
        )
    prov = m.provenance
    fast = getattr(prov, "rank_table_fast", None)
    if fast is not None:
        table = fast()
        if table is not None:
            return table
    out = np.empty(1 << n, dtype=np.uint8)
    rank_mask = m._rank_mask
    for mask in range(1 << n):
        out[mask] = rank_mask(mask)
    return out


def validate_rank_axioms(m: Matroid, cap: int = 14) -> None:
    """Exhaustive rank-axiom check; raises PreconditionError on violation.

    Checks r(empty) = 0, unit increase, and submodularity over all pairs.
    """
    n = m.size
    if n > cap:
        raise ResourceLimitError(f"axiom validation needs |E| <= {cap}")
    table = rank_table(m, cap=cap).astype(np.int16)
    if table[0] != 0:
        raise PreconditionError("rank of empty set is not 0")
    idx = np.arange(1 << n)
    for e in range(n):
        bit = 1 << e
        without = idx[(idx & bit) == 0]
        diff = table[without | bit] - table[without]
        if diff.min() < 0 or diff.max() > 1:
            raise PreconditionError(f"unit-increase axiom fails at element {e}")
    for x in range(1 << n):
        union = table[idx | x]
        inter = table[idx & x]
        if np.any(union + inter > table[x] + table):
            y = int(np.argmax((union + inter) - (table[x] + table)))
            raise PreconditionError(
                f"submodularity fails at X={elements_of(x)} Y={elements_of(y)}"
            )


# ---------------------------------------------------------------------------
# density bound


@dataclass(frozen=True)
class KungReport:
    line_bound: int          # l: no rank-2 uniform minor on l+2 elements
    rank: int
    epsilon: int
    bound: int               # (l^r - 1) / (l - 1)
    holds: bool
    tight: bool


def kung_bound_check(m: Matroid, line_bound: int,
                     check_minor: bool = False) -> KungReport:
    """Point-count bound epsilon(M) <= (l^r - 1)/(l - 1) for matroids with
    no (l+2)-point line minor.

    The precondition is caller-asserted unless check_minor=True, which runs
    the minor search and raises PreconditionError on violation.
    """
    if line_bound < 2:
        raise DomainError("line bound must be >= 2")
    if check_minor:
        from .minors import has_minor
        from .constructions import uniform
        if has_minor(m, uniform(2, line_bound + 2)) is not None:
            raise PreconditionError(
                f"matroid has a U(2,{line_bound + 2}) minor; bound does not apply"
            )
    r = m.full_rank()
    bound = (line_bound ** r - 1) // (line_bound - 1)
    eps = epsilon(m)
    return KungReport(line_bound, r, eps, bound, eps <= bound, eps == bound)
