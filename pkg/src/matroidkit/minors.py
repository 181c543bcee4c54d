"""Exhaustive minor containment with certificates, biclique finding, graphic
recognition, extension classification, and spike splitting witnesses.

Each search is complete within an explicit size cap and raises a resource
error beyond it; no search returns a silently wrong negative.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from ._bits import bits, elements_of, mask_of, popcount
from .core import (
    Matroid,
    MinorCertificate,
    epsilon,
    loops_mask,
    minor_with_map,
    parallel_classes,
    restriction,
    same_rank_function,
)
from .errors import DomainError, PreconditionError, ResourceLimitError
from .isomorphism import find_embedding
from .representations import GraphRep
from .constructions import biclique, clique, is_spike, uniform

MINOR_SIZE_CAP = 24
GRAPHIC_SIZE_CAP = 18


# ---------------------------------------------------------------------------
# minor containment


def has_minor(m: Matroid, target: Matroid, *, size_cap: int = MINOR_SIZE_CAP,
              validate: bool = True) -> Optional[MinorCertificate]:
    """Search for a minor of m isomorphic to target; certificate or None.

    Complete: every minor is m / C restricted to a subset for some
    independent C of size r(m) - r(target), and swapping parallel elements
    of C is an isomorphism, so C runs over parallel-class representatives.
    The restriction is then found by embedding the target's simplification
    into that of m / C with parallel-class capacities and loops respected.
    """
    if m.size > size_cap:
        raise ResourceLimitError(
            f"minor search over {m.size} elements exceeds cap {size_cap}")
    dr = m.full_rank() - target.full_rank()
    if dr < 0 or target.size > m.size - dr:
        return None

    t_classes = parallel_classes(target)
    demand = [len(c) for c in t_classes]
    n_t_loops = target.size - sum(demand)

    reps = [c[0] for c in parallel_classes(m)]
    for combo in itertools.combinations(reps, dr):
        cmask = mask_of(combo)
        if m.r(cmask) != dr:
            continue
        mc, keep = minor_with_map(m, combo, ())
        cert = _embed_restriction(m, mc, keep, combo, target, t_classes,
                                  demand, n_t_loops)
        if cert is not None:
            if validate and target.size <= 20:
                if not cert.validate(m, target):
                    raise RuntimeError(
                        "minor search built an invalid certificate")
            return cert
    return None


def _embed_restriction(m, mc, keep, combo, target, t_classes, demand,
                       n_t_loops):
    mc_classes = parallel_classes(mc)
    if len(mc_classes) < len(t_classes):
        return None
    if mc.size - sum(len(c) for c in mc_classes) < n_t_loops:
        return None

    # simplification of mc; si element i descends from the class whose
    # representative is the i-th smallest
    si_reps = sorted(c[0] for c in mc_classes)
    rep_index = {e: i for i, e in enumerate(si_reps)}
    mc_si, _ = minor_with_map(
        mc, (), [e for e in range(mc.size) if e not in rep_index])
    capacity = [0] * len(si_reps)
    for cls in mc_classes:
        capacity[rep_index[cls[0]]] = len(cls)

    candidates = [[h for h in range(len(si_reps)) if capacity[h] >= demand[t]]
                  for t in range(len(t_classes))]
    if any(not c for c in candidates):
        return None
    t_reps = {c[0] for c in t_classes}
    t_si, _ = minor_with_map(
        target, (), [e for e in range(target.size) if e not in t_reps])
    phi = find_embedding(mc_si, t_si, candidates=candidates)
    if phi is None:
        return None

    # expand the point-level embedding to every target element
    class_at = {rep_index[cls[0]]: cls for cls in mc_classes}
    mapping: list[tuple[int, int]] = []
    for t_idx, host_idx in phi.items():
        for te, he in zip(t_classes[t_idx], class_at[host_idx]):
            mapping.append((te, keep[he]))
    host_loops = elements_of(loops_mask(mc))
    for te, he in zip(elements_of(loops_mask(target)), host_loops):
        mapping.append((te, keep[he]))

    image = mask_of(h for _, h in mapping)
    deleted = m.full_mask & ~image & ~mask_of(combo)
    return MinorCertificate(frozenset(combo), frozenset(elements_of(deleted)),
                            tuple(sorted(mapping)))


def find_clique_minor(m: Matroid, n: int, **kw) -> Optional[MinorCertificate]:
    """Certificate for a minor isomorphic to clique(n + 1), or None."""
    if n < 2:
        raise DomainError("clique minors need n >= 2")
    return has_minor(m, clique(n + 1), **kw)


# ---------------------------------------------------------------------------
# bicliques


def find_biclique_subgraph(g: GraphRep, m: int
                           ) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Vertex sets (A, B) of a complete bipartite subgraph with |A| = |B| = m.

    Exhaustive over left sides; deterministic (lexicographically first A,
    then least B). Loops never count; multi-edges collapse.
    """
    if m < 1:
        raise DomainError("biclique subgraph needs m >= 1")
    nv = g.n_vertices
    if nv > 24:
        raise ResourceLimitError("biclique subgraph search needs <= 24 vertices")
    adj = [0] * nv
    for u, v in g.edges:
        if u != v:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    for a in itertools.combinations(range(nv), m):
        common = (1 << nv) - 1
        for u in a:
            common &= adj[u]
        common &= ~mask_of(a)
        if popcount(common) >= m:
            return tuple(a), elements_of(common)[:m]
    return None


def find_biclique_restriction(m: Matroid, k: int) -> Optional[MinorCertificate]:
    """A restriction of m isomorphic to the cycle matroid of K(k, k)."""
    if k < 1:
        raise DomainError("biclique restriction needs k >= 1")
    target = biclique(k, k)
    if target.size > m.size:
        return None
    phi = find_embedding(m, target)
    if phi is None:
        return None
    deleted = m.full_mask & ~mask_of(phi.values())
    return MinorCertificate(frozenset(), frozenset(elements_of(deleted)),
                            tuple(sorted(phi.items())))


# ---------------------------------------------------------------------------
# graphic recognition


def is_graphic(m: Matroid, *, size_cap: int = GRAPHIC_SIZE_CAP
               ) -> Optional[GraphRep]:
    """A graph realizing m (edge i is element i), or None.

    Every graphic matroid has a connected realization on r(M) + 1 vertices
    (wedge the components at a vertex), so the search places a fixed basis
    as a spanning tree with first-use vertex labels, after which every
    remaining element's position is forced by its fundamental circuit. The
    winner is checked by exhaustive rank agreement before returning.
    """
    if m.size > size_cap:
        raise ResourceLimitError(
            f"graphic test over {m.size} elements exceeds cap {size_cap}")
    r = m.full_rank()
    if r == 0:
        return GraphRep(1, tuple((0, 0) for _ in range(m.size)))

    # simple rank-r graphic matroids top out at a clique
    if epsilon(m) > r * (r + 1) // 2:
        return None

    classes = parallel_classes(m)
    rep_of = {e: cls[0] for cls in classes for e in cls}
    reps = sorted(cls[0] for cls in classes)

    basis: list[int] = []
    bmask = 0
    for e in reps:
        if m.r(bmask | (1 << e)) > len(basis):
            basis.append(e)
            bmask |= 1 << e
    in_basis = set(basis)
    rest = [e for e in reps if e not in in_basis]
    forced = _fundamental_circuits(m, basis, bmask, rest)
    if forced is None:
        return None

    placement = _place_tree(basis, rest, forced, r)
    if placement is None:
        return None

    loop_bits = loops_mask(m)
    edges = tuple(
        (0, 0) if (loop_bits >> e) & 1 else placement[rep_of[e]]
        for e in range(m.size)
    )
    rep = GraphRep(r + 1, edges)
    if not same_rank_function(m, rep.matroid(), cap=size_cap):
        return None
    return rep


def _fundamental_circuits(m, basis, bmask, rest) -> Optional[dict[int, int]]:
    """For each non-basis element, the basis part of its unique circuit."""
    out = {}
    nb = len(basis)
    for e in rest:
        if m.r(bmask | (1 << e)) != nb:
            return None
        circ = 0
        for b in basis:
            if m.r((bmask ^ (1 << b)) | (1 << e)) == nb:
                circ |= 1 << b
        out[e] = circ
    return out


def _place_tree(basis, rest, forced, r):
    """Backtracking spanning-tree placement with canonical vertex labels.

    Vertices are numbered by first use, so each edge either joins two used
    vertices, one used vertex and the next fresh label, or the next two
    labels. Up to relabeling this covers every spanning tree.
    """
    n_b = len(basis)

    def root(x, comp):
        while comp[x] != x:
            x = comp[x]
        return x

    def search(i, comp, used, placed):
        if i == n_b:
            return _force_rest(rest, forced, placed)
        options = [(a, b) for a in range(used) for b in range(a + 1, used)]
        if used < r + 1:
            options += [(a, used) for a in range(used)]
        if used + 1 < r + 1:
            options.append((used, used + 1))
        for a, b in options:
            ra, rb = root(a, comp), root(b, comp)
            if ra == rb:
                continue  # basis edges must keep the graph a forest
            comp2 = list(comp)
            comp2[max(ra, rb)] = min(ra, rb)
            got = search(i + 1, comp2, max(used, b + 1),
                         {**placed, basis[i]: (a, b)})
            if got is not None:
                return got
        return None

    return search(0, list(range(r + 1)), 0, {})


def _force_rest(rest, forced, placed):
    """Tree is fixed; each leftover element must close its circuit's path."""
    used_pairs = set(placed.values())
    out = dict(placed)
    for e in rest:
        ends = _path_endpoints(placed, forced[e])
        if ends is None:
            return None
        pair = (min(ends), max(ends))
        if pair in used_pairs:
            return None  # would be parallel to an earlier element
        used_pairs.add(pair)
        out[e] = pair
    return out


def _path_endpoints(placed, circ_mask) -> Optional[tuple[int, int]]:
    """Endpoints of the given tree edges if they form a path, else None."""
    degree: dict[int, int] = {}
    for e in bits(circ_mask):
        for v in placed[e]:
            degree[v] = degree.get(v, 0) + 1
    odd = [v for v, d in degree.items() if d % 2 == 1]
    if len(odd) != 2 or any(d != 2 for v, d in degree.items() if v not in odd):
        return None
    return odd[0], odd[1]


# ---------------------------------------------------------------------------
# clique extensions


@dataclass(frozen=True)
class ExtensionClass:
    """Outcome of the one-element dichotomy over a clique.

    reason is one of loop / coloop / parallel / none-of-these; the
    extension is graphic exactly when the reason is not none-of-these.
    """

    graphic: bool
    reason: str
    witness: Optional[int] = None


def classify_clique_extension(m: Matroid, e: int,
                              *, check_base: bool = True) -> ExtensionClass:
    """Classify element e added to a clique: the result is graphic iff e is
    a loop, a coloop, or parallel to an existing element.

    check_base verifies that deleting e really leaves a clique.
    """
    if not 0 <= e < m.size:
        raise DomainError(f"element {e} out of range")
    base = m.full_mask & ~(1 << e)
    if check_base:
        _require_clique(restriction(m, elements_of(base)))
    bit = 1 << e
    if m.r(bit) == 0:
        return ExtensionClass(True, "loop")
    if m.r(base) < m.full_rank():
        return ExtensionClass(True, "coloop")
    for f in bits(base):
        if m.r(1 << f) == 1 and m.r(bit | (1 << f)) == 1:
            return ExtensionClass(True, "parallel", witness=f)
    return ExtensionClass(False, "none-of-these")


def _require_clique(base: Matroid) -> int:
    """DomainError unless the matroid is a clique; returns its vertex count.

    A simple graphic matroid of rank r with r(r+1)/2 elements must be the
    complete graph on r + 1 vertices.
    """
    r = base.full_rank()
    if loops_mask(base) or any(len(c) > 1 for c in parallel_classes(base)):
        raise DomainError("base matroid is not simple, so not a clique")
    if base.size != r * (r + 1) // 2:
        raise DomainError("base matroid has the wrong size for a clique")
    if is_graphic(base) is None:
        raise DomainError("base matroid is not graphic")
    return r + 1


# ---------------------------------------------------------------------------
# spike splitting


def spike_split_witness(m: Matroid, spike_elements: Iterable[int], e: int
                        ) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Two spike restrictions of m / e whose union is E(S) - {e}.

    S = m restricted to spike_elements must be a spike, and e a nonloop
    that is neither a tip of S nor parallel to one. Returns the two element
    sets in m's labels, or None when no pair of spike restrictions covers.
    """
    smask = m.mask(spike_elements)
    s_elems = elements_of(smask)
    decomp = is_spike(restriction(m, s_elems))
    if decomp is None:
        raise PreconditionError("the given set is not a spike restriction")
    tips = {s_elems[i] for i in decomp.tips}
    bit = 1 << e
    if m.r(bit) == 0:
        raise PreconditionError("e is a loop")
    if e in tips:
        raise PreconditionError("e is a tip of the spike")
    for t in tips:
        if m.r(bit | (1 << t)) == 1:
            raise PreconditionError("e is parallel to a tip of the spike")

    mc, keep = minor_with_map(m, [e], ())
    fwd = {h: i for i, h in enumerate(keep)}
    goal = mask_of(fwd[x] for x in s_elems if x != e)

    # spikes have rank >= 3 and hence at least 7 elements
    pool = elements_of(goal)
    found: list[int] = []
    for size in range(len(pool), 6, -1):
        for sub in itertools.combinations(pool, size):
            if is_spike(restriction(mc, sub)) is not None:
                found.append(mask_of(sub))
    for i, s1 in enumerate(found):
        for s2 in found[i:]:
            if s1 | s2 == goal:
                return (tuple(keep[x] for x in bits(s1)),
                        tuple(keep[x] for x in bits(s2)))
    return None


# ---------------------------------------------------------------------------
# membership witnesses


@dataclass(frozen=True)
class MembershipRecord:
    claim: str
    host: str
    target: str
    ok: bool
    certificate: Optional[MinorCertificate] = None


def membership_suite(name: str) -> list[MembershipRecord]:
    """Certified minor memberships witnessing one extension family.

    name is square-family, triangle-family, or circle-family. Each record
    pins a specific matroid inside a specific family member.
    """
    from .constructions import (fano, free_ext_clique, square_ext,
                                triangle_ext, whirl)

    if name == "square-family":
        checks = [
            ("the rank-3 binary projective plane is the member on 4 vertices",
             square_ext, fano(), 4, 4),
            ("the rank-3 binary projective plane embeds in the member on "
             "5 vertices", square_ext, fano(), 5, 5),
        ]
    elif name == "triangle-family":
        checks = [
            ("the 4-point line is the member on 3 vertices",
             triangle_ext, uniform(2, 4), 3, 3),
            ("the rank-3 whirl embeds in a member on at most 6 vertices",
             triangle_ext, whirl(3), 4, 6),
        ]
    elif name == "circle-family":
        checks = [
            ("the 5-point rank-3 uniform matroid embeds in a member on at "
             "most 6 vertices", free_ext_clique, uniform(3, 5), 4, 6),
            ("the 6-point rank-3 uniform matroid (the tipless free spike) "
             "embeds in a member on at most 6 vertices",
             free_ext_clique, uniform(3, 6), 4, 6),
        ]
    else:
        raise DomainError(f"unknown membership suite {name!r}")

    out = []
    for claim, family, target, lo, hi in checks:
        host, cert = _first_host(family, target, lo, hi)
        if host is None:
            out.append(MembershipRecord(claim, "(none found)", target.name,
                                        False))
        else:
            out.append(MembershipRecord(claim, host.name, target.name, True,
                                        cert))
    return out


def _first_host(family, target, lo: int, hi: int):
    for k in range(lo, hi + 1):
        host = family(k)
        cert = has_minor(host, target)
        if cert is not None:
            return host, cert
    return None, None
