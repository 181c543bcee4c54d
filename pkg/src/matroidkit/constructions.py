"""Named matroid families and rank-oracle transformers.

Families with natural matrix or graph representations get concrete backing
(so their minors stay concrete); genuinely oracle-shaped families (uniform,
whirl, truncations, extensions) carry recipe provenance instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from ._bits import bits, elements_of, mask_of, popcount
from .core import (
    Matroid,
    Recipe,
    closure_mask,
    contract,
    parallel_classes,
    loops_mask,
)
from .errors import DomainError, PreconditionError
from .representations import (
    EvenCycleRep,
    GraphRep,
    LinearRep,
    SignedGraphRep,
    from_graph,
    from_matrix,
)


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


# ---------------------------------------------------------------------------
# plain families


def clique(n: int) -> Matroid:
    """Cycle matroid of the complete graph on n vertices (rank n-1)."""
    if n < 1:
        raise DomainError("clique needs n >= 1")
    return from_graph(n, _pairs(n), name=f"clique({n})")


def biclique(m: int, n: int) -> Matroid:
    """Cycle matroid of the complete bipartite graph K(m, n)."""
    if m < 1 or n < 1:
        raise DomainError("biclique needs m, n >= 1")
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    return from_graph(m + n, edges, name=f"biclique({m},{n})")


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise DomainError("uniform needs 0 <= r <= n")

    def rank_mask(mask: int) -> int:
        return min(popcount(mask), r)

    return Matroid(n, rank_mask, provenance=Recipe("uniform", params={"r": r, "n": n}),
                   name=f"uniform({r},{n})")


def whirl(r: int) -> Matroid:
    """Relax the rim of a rank-r wheel: the rim circuit becomes independent.

    Elements 0..r-1 are spokes, r..2r-1 the rim.
    """
    if r < 2:
        raise DomainError("whirl needs r >= 2")
    hub_edges = [(0, i + 1) for i in range(r)]
    rim_edges = [(i + 1, (i + 1) % r + 1) for i in range(r)]
    wheel = from_graph(r + 1, hub_edges + rim_edges)
    rim_mask = ((1 << r) - 1) << r

    def rank_mask(mask: int) -> int:
        return wheel.r(mask) + (1 if mask == rim_mask else 0)

    return Matroid(2 * r, rank_mask, provenance=Recipe("whirl", params={"r": r}),
                   name=f"whirl({r})")


def pg32() -> Matroid:
    """Rank-4 binary projective geometry: all 15 nonzero GF(2)^4 columns."""
    rows = [[(k >> i) & 1 for k in range(1, 16)] for i in range(4)]
    return from_matrix(rows, 2, name="pg32")


def fano() -> Matroid:
    """Rank-3 binary projective plane (all 7 nonzero GF(2)^3 columns)."""
    rows = [[(k >> i) & 1 for k in range(1, 8)] for i in range(3)]
    return from_matrix(rows, 2, name="fano")


# ---------------------------------------------------------------------------
# clique extensions


def square_ext(n: int) -> Matroid:
    """Binary clique extension: incidence columns of K_n plus one column
    charging four vertices. Elements follow the lexicographic edge order;
    the extension point is last.
    """
    if n < 4:
        raise DomainError("square_ext needs n >= 4")
    cols = []
    for i, j in _pairs(n):
        col = [0] * n
        col[i] = col[j] = 1
        cols.append(col)
    v = [0] * n
    v[0] = v[1] = v[2] = v[3] = 1
    cols.append(v)
    rows = [[col[i] for col in cols] for i in range(n)]
    return from_matrix(rows, 2, name=f"square_ext({n})")


def triangle_ext(n: int) -> Matroid:
    """Ternary clique extension: a point placed freely on one triangle.

    Canonical matrix form: reduced signed incidence of K_n over GF(3)
    (star columns are units, cross columns b_i - b_j) plus the column
    b_1 + b_2, which lies on the triangle {01, 02, 12}. Extension point
    is last. Cross-checked against the principal-extension oracle in tests.
    """
    if n < 3:
        raise DomainError("triangle_ext needs n >= 3")
    nr = n - 1
    cols = []
    for i, j in _pairs(n):
        col = [0] * nr
        if i == 0:
            col[j - 1] = 1
        else:
            col[i - 1] = 1
            col[j - 1] = 2  # -1 mod 3
        cols.append(col)
    w = [0] * nr
    w[0] = w[1] = 1
    cols.append(w)
    rows = [[col[i] for col in cols] for i in range(nr)]
    return from_matrix(rows, 3, name=f"triangle_ext({n})")


def free_ext_clique(n: int) -> Matroid:
    """Free extension of clique(n); the new point is last."""
    if n < 1:
        raise DomainError("free_ext_clique needs n >= 1")
    m = free_extension(clique(n))
    m.name = f"free_ext_clique({n})"
    return m


def n_square(n: int) -> Matroid:
    """Contract the extension point of square_ext(n+2). Rank n."""
    if n < 2:
        raise DomainError("n_square needs n >= 2")
    base = square_ext(n + 2)
    m = contract(base, [base.size - 1])
    m.name = f"n_square({n})"
    return m


def n_triangle(n: int) -> Matroid:
    """Contract the extension point of triangle_ext(n+2). Rank n."""
    if n < 1:
        raise DomainError("n_triangle needs n >= 1")
    base = triangle_ext(n + 2)
    m = contract(base, [base.size - 1])
    m.name = f"n_triangle({n})"
    return m


def n_square_even_cycle_rep(n: int) -> EvenCycleRep:
    """Even-cycle representation of si(n_square(n)).

    A clique on n vertices plus an odd part: one loop and a doubled edge
    for every pair meeting {0, 1}. Vertices 0 and 1 form a blocking pair.
    """
    if n < 2:
        raise DomainError("needs n >= 2")
    edges = list(_pairs(n))
    w_start = len(edges)
    edges.append((0, 0))
    edges.extend((0, x) for x in range(1, n))
    edges.extend((1, x) for x in range(2, n))
    odd = range(w_start, len(edges))
    return EvenCycleRep(n, tuple(edges), frozenset(odd))


def n_triangle_signed_rep(n: int) -> SignedGraphRep:
    """Signed-graph representation of si(n_triangle(n)).

    An odd loop at every vertex, a clique on n vertices, and odd doubled
    edges at vertex 0 only, matching the one-covering-vertex form.
    """
    if n < 1:
        raise DomainError("needs n >= 1")
    edges = [(j, j) for j in range(n)]
    edges.extend(_pairs(n))
    w_edges = [(0, x) for x in range(1, n)]
    odd = list(range(n)) + list(range(len(edges), len(edges) + len(w_edges)))
    edges.extend(w_edges)
    return SignedGraphRep(n, tuple(edges), frozenset(odd))


# ---------------------------------------------------------------------------
# transformers


def truncation(m: Matroid) -> Matroid:
    """Cap ranks at r(M) - 1."""
    r = m.full_rank()
    if r == 0:
        raise DomainError("cannot truncate a rank-0 matroid")
    target = r - 1

    def rank_mask(mask: int) -> int:
        return min(m.r(mask), target)

    return Matroid(m.size, rank_mask, provenance=Recipe("truncation", args=(m,)),
                   name=f"truncation({m.name})" if m.name else "")


def free_extension(m: Matroid) -> Matroid:
    """Add one element as freely as possible: r(X + e) = min(r(X) + 1, r(M)).

    The new element has index |E(M)|.
    """
    bit = 1 << m.size
    rm = m.full_rank()

    def rank_mask(mask: int) -> int:
        if mask & bit:
            return min(m.r(mask ^ bit) + 1, rm)
        return m.r(mask)

    return Matroid(m.size + 1, rank_mask,
                   provenance=Recipe("free-extension", args=(m,)))


def principal_extension(m: Matroid, flat: Iterable[int]) -> Matroid:
    """Add one element freely on a flat: r(X + e) = min(r(X) + 1, r(X | F)).

    Raises PreconditionError if the given set is not a flat. The new
    element has index |E(M)|.
    """
    fmask = m.mask(flat)
    if closure_mask(m, fmask) != fmask:
        raise PreconditionError(f"{sorted(elements_of(fmask))} is not a flat")
    bit = 1 << m.size

    def rank_mask(mask: int) -> int:
        if mask & bit:
            base = mask ^ bit
            return min(m.r(base) + 1, m.r(base | fmask))
        return m.r(mask)

    return Matroid(m.size + 1, rank_mask,
                   provenance=Recipe("principal-extension", args=(m,),
                                     params={"flat": elements_of(fmask)}))


# ---------------------------------------------------------------------------
# spikes


@dataclass(frozen=True)
class SpikeDecomposition:
    """Witnesses the spike structure: a tip parallel class T and leg pairs.

    Leg pair i spans a rank-2 flat with T; firsts and seconds each form a
    circuit after contracting T. rank == number of leg pairs.
    """

    tips: tuple[int, ...]
    legs: tuple[tuple[int, int], ...]
    rank: int


def spike(r: int) -> Matroid:
    """Free rank-r spike with a single tip.

    Truncation of the cycle matroid of K(2, r) plus the cross edge joining
    the degree-r vertices; that edge survives as the tip (element 0), and
    legs are the pairs (2i+1, 2i+2).
    """
    if r < 3:
        raise DomainError("spike needs rank >= 3")
    edges = [(0, 1)]
    for i in range(r):
        edges.append((0, 2 + i))
        edges.append((1, 2 + i))
    m = truncation(from_graph(r + 2, edges))
    m.name = f"spike({r})"
    return m


def is_spike(m: Matroid) -> Optional[SpikeDecomposition]:
    """Search for a spike decomposition; None if the matroid is not a spike.

    Tries every parallel class as the tip set T, pairs the rest by the
    rank-2 flats through T, then searches leg orientations until the two
    transversals are circuits of M/T.
    """
    if m.size == 0 or loops_mask(m):
        return None
    classes = parallel_classes(m)
    rm = m.full_rank()
    for t_idx, tip_class in enumerate(classes):
        if any(len(c) != 1 for i, c in enumerate(classes) if i != t_idx):
            continue  # legs must induce a simple restriction
        t_mask = mask_of(tip_class)
        lines: dict[int, list[int]] = {}
        ok = True
        for e in range(m.size):
            if (t_mask >> e) & 1:
                continue
            line = closure_mask(m, t_mask | (1 << e))
            outside = line & ~t_mask
            lines.setdefault(outside, []).append(e)
        pairs = []
        for outside, members in sorted(lines.items()):
            if popcount(outside) != 2 or len(members) != 2:
                ok = False
                break
            pairs.append(tuple(members))
        if not ok or not pairs:
            continue
        k = len(pairs)
        if rm != k:
            continue
        legs = _orient_legs(m, t_mask, pairs)
        if legs is not None:
            return SpikeDecomposition(tuple(tip_class), legs, k)
    return None


def _orient_legs(m: Matroid, t_mask: int, pairs: list[tuple[int, int]]
                 ) -> Optional[tuple[tuple[int, int], ...]]:
    """Pick one leg per pair so both transversals are circuits of M/T."""
    k = len(pairs)
    rt = m.r(t_mask)

    def contracted_rank(mask: int) -> int:
        return m.r(mask | t_mask) - rt

    def is_circuit(elems: list[int]) -> bool:
        mask = mask_of(elems)
        if contracted_rank(mask) != len(elems) - 1:
            return False
        return all(contracted_rank(mask ^ (1 << e)) == len(elems) - 1
                   for e in elems)

    # first pair fixed: swapping X and Y is a symmetry
    for choice in range(1 << (k - 1)):
        xs = [pairs[0][0]]
        ys = [pairs[0][1]]
        for i in range(1, k):
            a, b = pairs[i]
            if (choice >> (i - 1)) & 1:
                a, b = b, a
            xs.append(a)
            ys.append(b)
        if is_circuit(xs) and is_circuit(ys):
            return tuple((xs[i], ys[i]) for i in range(k))
    return None
