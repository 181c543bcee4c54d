"""Concrete matroid representations: GF(p) matrices and (decorated) graphs.

Each representation object can build its Matroid (it becomes the matroid's
provenance) and, where the class is closed under the operation, produce a
reduced representation of a minor so that derived matroids stay concrete
and serializable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from ._bits import bits
from .core import Matroid
from .errors import DomainError, GroundSetError

SUPPORTED_PRIMES = (2, 3, 5, 7)


def _inverses(p: int) -> list[int]:
    return [0] + [pow(a, p - 2, p) for a in range(1, p)]


# ---------------------------------------------------------------------------
# linear representations


@dataclass(frozen=True)
class LinearRep:
    """Column vectors over GF(prime); element i is column i."""

    prime: int
    n_rows: int
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.prime not in SUPPORTED_PRIMES:
            raise DomainError(f"prime must be one of {SUPPORTED_PRIMES}")
        for col in self.columns:
            if len(col) != self.n_rows:
                raise DomainError("ragged matrix")
            if any(not (0 <= x < self.prime) for x in col):
                raise DomainError("entries must be reduced mod p")

    def matroid(self, name: str = "") -> Matroid:
        if self.prime == 2:
            packed = tuple(
                sum(1 << i for i, x in enumerate(col) if x) for col in self.columns
            )

            def rank_mask(mask: int) -> int:
                lead: dict[int, int] = {}
                r = 0
                for e in bits(mask):
                    v = packed[e]
                    while v:
                        h = v.bit_length() - 1
                        w = lead.get(h)
                        if w is None:
                            lead[h] = v
                            r += 1
                            break
                        v ^= w
                return r

        else:
            p = self.prime
            nr = self.n_rows
            cols = self.columns
            inv = _inverses(p)

            def rank_mask(mask: int) -> int:
                pivots: list[tuple[int, list[int]]] = []
                r = 0
                for e in bits(mask):
                    v = list(cols[e])
                    for prow, pvec in pivots:
                        c = v[prow]
                        if c:
                            for j in range(nr):
                                v[j] = (v[j] - c * pvec[j]) % p
                    h = next((j for j in range(nr) if v[j]), -1)
                    if h >= 0:
                        iv = inv[v[h]]
                        pivots.append((h, [(x * iv) % p for x in v]))
                        r += 1
                return r

        return Matroid(len(self.columns), rank_mask, provenance=self, name=name)

    def minor_rep(self, contract: tuple[int, ...], delete: tuple[int, ...]
                  ) -> "LinearRep":
        """Matrix of the minor: pivot out contracted columns, drop rows."""
        p = self.prime
        inv = _inverses(p)
        cols = [list(c) for c in self.columns]
        n = len(cols)
        gone = set(contract) | set(delete)
        dead_rows: set[int] = set()
        for c in sorted(contract):
            col = cols[c]
            h = next((j for j in range(self.n_rows)
                      if j not in dead_rows and col[j]), -1)
            if h < 0:
                continue  # loop by now; contracting it = deleting it
            iv = inv[col[h]]
            col = [(x * iv) % p for x in col]
            for d in range(n):
                if d == c:
                    continue
                coeff = cols[d][h]
                if coeff:
                    cols[d] = [(cols[d][j] - coeff * col[j]) % p
                               for j in range(self.n_rows)]
            dead_rows.add(h)
        keep_rows = [j for j in range(self.n_rows) if j not in dead_rows]
        keep_cols = [d for d in range(n) if d not in gone]
        return LinearRep(
            p,
            len(keep_rows),
            tuple(tuple(cols[d][j] for j in keep_rows) for d in keep_cols),
        )


def from_matrix(rows: Sequence[Sequence[int]], prime: int,
                name: str = "") -> Matroid:
    """Matroid of the column vectors of a matrix over GF(prime)."""
    if prime not in SUPPORTED_PRIMES:
        raise DomainError(f"prime must be one of {SUPPORTED_PRIMES}")
    if rows:
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DomainError("ragged matrix")
    else:
        width = 0
    columns = tuple(
        tuple(int(rows[i][j]) % prime for i in range(len(rows)))
        for j in range(width)
    )
    return LinearRep(prime, len(rows), columns).matroid(name=name)


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class GraphRep:
    """Multigraph; element i is edge i. Loops (u == u) allowed."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise GroundSetError("edge endpoint out of range")

    def matroid(self, name: str = "") -> Matroid:
        edges = self.edges
        nv = self.n_vertices

        def rank_mask(mask: int) -> int:
            parent = list(range(nv))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            r = 0
            for e in bits(mask):
                u, v = edges[e]
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    r += 1
            return r

        return Matroid(len(edges), rank_mask, provenance=self, name=name)

    def minor_rep(self, contract: tuple[int, ...], delete: tuple[int, ...]
                  ) -> "GraphRep":
        """Graph of the minor: merge endpoints of contracted edges."""
        parent = list(range(self.n_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in contract:
            u, v = self.edges[c]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        roots = sorted({find(x) for x in range(self.n_vertices)})
        rename = {root: i for i, root in enumerate(roots)}
        gone = set(contract) | set(delete)
        new_edges = tuple(
            (rename[find(u)], rename[find(v)])
            for i, (u, v) in enumerate(self.edges)
            if i not in gone
        )
        return GraphRep(len(roots), new_edges)

    def rank_table_fast(self) -> Optional[np.ndarray]:
        """Vectorized union-find over all edge subsets at once."""
        m = len(self.edges)
        nv = self.n_vertices
        if m > 22 or nv > 120:
            return None
        size = 1 << m
        comp = np.tile(np.arange(nv, dtype=np.int8), (size, 1))
        idx = np.arange(size, dtype=np.int64)
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                continue
            sel = ((idx >> i) & 1).astype(bool)
            sub = comp[sel]
            lu = sub[:, u]
            lv = sub[:, v]
            lo = np.minimum(lu, lv)
            hi = np.maximum(lu, lv)
            sub = np.where(sub == hi[:, None], lo[:, None], sub)
            comp[sel] = sub
        roots = (comp == np.arange(nv, dtype=np.int8)[None, :]).sum(axis=1)
        return (nv - roots).astype(np.uint8)


def from_graph(n_vertices: int, edges: Iterable[tuple[int, int]],
               name: str = "") -> Matroid:
    """Cycle matroid of a multigraph."""
    return GraphRep(n_vertices, tuple((int(u), int(v)) for u, v in edges)
                    ).matroid(name=name)


# ---------------------------------------------------------------------------
# decorated graphs: even-cycle and signed-graphic


@dataclass(frozen=True)
class EvenCycleRep:
    """Graph plus a set W of odd edges; the matroid of the GF(2) matrix whose
    columns are edge incidence vectors stacked with the characteristic row
    of W. A loop in W is a nonloop of the matroid (its column is the w-row
    unit); a loop outside W is a matroid loop.
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    odd: frozenset[int]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise GroundSetError("edge endpoint out of range")
        if any(not (0 <= i < len(self.edges)) for i in self.odd):
            raise GroundSetError("odd set must index edges")

    def to_linear(self) -> LinearRep:
        nr = self.n_vertices + 1
        columns = []
        for i, (u, v) in enumerate(self.edges):
            col = [0] * nr
            if u != v:
                col[u] ^= 1
                col[v] ^= 1
            if i in self.odd:
                col[nr - 1] = 1
            columns.append(tuple(col))
        return LinearRep(2, nr, tuple(columns))

    def matroid(self, name: str = "") -> Matroid:
        inner = self.to_linear().matroid()
        return Matroid(len(self.edges), inner._rank_mask, provenance=self,
                       name=name)

    def minor_rep(self, contract: tuple[int, ...], delete: tuple[int, ...]):
        if contract:
            return None  # contractions leave the class; fall back to a recipe
        gone = set(delete)
        keep = [i for i in range(len(self.edges)) if i not in gone]
        renum = {old: new for new, old in enumerate(keep)}
        return EvenCycleRep(
            self.n_vertices,
            tuple(self.edges[i] for i in keep),
            frozenset(renum[i] for i in self.odd if i in renum),
        )


@dataclass(frozen=True)
class SignedGraphRep:
    """Graph plus odd edges over GF(3): column b_u + b_v for odd edges,
    b_u - b_v otherwise. Odd loops give +-b_v (a nonloop); even loops are
    matroid loops. Swapping an edge's end order negates its column, so the
    matroid is orientation-independent.
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    odd: frozenset[int]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise GroundSetError("edge endpoint out of range")
        if any(not (0 <= i < len(self.edges)) for i in self.odd):
            raise GroundSetError("odd set must index edges")

    def to_linear(self) -> LinearRep:
        columns = []
        for i, (u, v) in enumerate(self.edges):
            col = [0] * self.n_vertices
            sign = 1 if i in self.odd else -1
            col[u] = (col[u] + 1) % 3
            col[v] = (col[v] + sign) % 3
            columns.append(tuple(col))
        return LinearRep(3, self.n_vertices, tuple(columns))

    def matroid(self, name: str = "") -> Matroid:
        inner = self.to_linear().matroid()
        return Matroid(len(self.edges), inner._rank_mask, provenance=self,
                       name=name)

    def minor_rep(self, contract: tuple[int, ...], delete: tuple[int, ...]):
        if contract:
            return None
        gone = set(delete)
        keep = [i for i in range(len(self.edges)) if i not in gone]
        renum = {old: new for new, old in enumerate(keep)}
        return SignedGraphRep(
            self.n_vertices,
            tuple(self.edges[i] for i in keep),
            frozenset(renum[i] for i in self.odd if i in renum),
        )


def even_cycle(n_vertices: int, edges: Iterable[tuple[int, int]],
               odd: Iterable[int], name: str = "") -> Matroid:
    return EvenCycleRep(n_vertices, tuple((int(u), int(v)) for u, v in edges),
                        frozenset(odd)).matroid(name=name)


def signed_graphic(n_vertices: int, edges: Iterable[tuple[int, int]],
                   odd: Iterable[int], name: str = "") -> Matroid:
    return SignedGraphRep(n_vertices, tuple((int(u), int(v)) for u, v in edges),
                          frozenset(odd)).matroid(name=name)


def has_blocking_pair(rep) -> Optional[tuple[int, int]]:
    """Least vertex pair (u, v) meeting every odd edge, or None.

    Inclusive reading: one vertex covering everything still yields a pair.
    Loops count as incident to their single endpoint. An empty odd set is
    covered by the least pair.
    """
    if not isinstance(rep, (EvenCycleRep, SignedGraphRep)):
        raise DomainError("blocking pairs are defined for decorated graphs")
    nv = rep.n_vertices
    odd_edges = [rep.edges[i] for i in sorted(rep.odd)]
    if nv == 1:
        return (0, 0) if all(u == v == 0 for u, v in odd_edges) else None
    for u in range(nv):
        for v in range(u + 1, nv):
            if all(a in (u, v) or b in (u, v) for a, b in odd_edges):
                return (u, v)
    return None
