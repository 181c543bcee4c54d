"""Reduce a nongraphic clique extension to a canonical family minor.

The driver mirrors the constructive argument behind the extension
dichotomy.  Given a matroid whose deletion at one point is a clique, it
finds the minimal flats spanning the extension point, merges their
components into a connected (hence modular) hull, and then either

* reads off a four-point line over a triangle       -> triangle_ext(m),
* reads off the binary plane over a K4 flat          -> square_ext(m+1),
* jumps to the free family via a large component     -> free_ext_clique(m),
* peels rank off the hull by single contractions, or
* contracts a cross edge to merge two components and recurses.

Every branch appends replayable transcript events (flats found,
contractions taken) and a successful run returns a minor certificate
validated exhaustively against the original matroid.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from ._bits import bits, elements_of
from .constructions import fano, free_ext_clique, square_ext, triangle_ext
from .core import Matroid, MinorCertificate, minor_with_map, validate_certificate
from .errors import DomainError, PreconditionError, ReductionDidNotClose
from .isomorphism import is_isomorphic

_DEPTH_CAP = 12

# pairs[x] is the (u, v) vertex pair of base element x, None for the point
_Pairs = list


@dataclass(frozen=True)
class ReductionResult:
    """A closed reduction: family kind, the exact target certified, the
    validated certificate, and the replayable search transcript."""

    kind: str
    target: Matroid
    certificate: MinorCertificate
    transcript: tuple[dict, ...]
    m: int


def reduce_clique_extension(host: Matroid, e: int, m: int) -> ReductionResult:
    """Drive the extension point of ``host`` to a canonical family minor.

    ``host`` minus ``e`` must be simple and isomorphic to a clique, and
    ``e`` must sit in a nongraphic position (not a loop, coloop, or
    parallel element); both are checked.  ``m >= 4`` sets the size of the
    family member searched for.  The result reports the exact target the
    certificate proves (triangle_ext(m), square_ext(m + 1), or
    free_ext_clique(m)); no normalization across families is attempted.

    Raises ReductionDidNotClose, carrying the transcript, when no branch
    closes at this scale.
    """
    if m < 4:
        raise DomainError("reduction needs m >= 4")
    if not 0 <= e < host.size:
        raise DomainError(f"element {e} out of range")
    _check_position(host, e, raising=True)
    _clique_realization(host, e)  # precondition; raises on a non-clique base
    transcript: list[dict] = []
    keep = tuple(range(host.size))
    res = _reduce(host, e, m, keep, frozenset(), host, transcript, 0)
    if res is None:
        raise ReductionDidNotClose("reduction did not close at this scale",
                                   transcript=transcript)
    return res


# ---------------------------------------------------------------------------
# preconditions and base structure


def _check_position(host: Matroid, e: int, raising: bool = False) -> bool:
    """True when e is in a nongraphic position over the base."""
    bit = 1 << e
    if host.r(bit) == 0:
        if raising:
            raise PreconditionError("extension point is a loop")
        return False
    if host.r(host.full_mask ^ bit) < host.full_rank():
        if raising:
            raise PreconditionError("extension point is a coloop")
        return False
    for f in bits(host.full_mask ^ bit):
        fb = 1 << f
        if host.r(fb) == 1 and host.r(bit | fb) == 1:
            if raising:
                raise PreconditionError(
                    f"extension point is parallel to element {f}")
            return False
    return True


def _clique_realization(host: Matroid, e: int) -> tuple[int, _Pairs]:
    """Recover vertex labels for the base from triangle ranks alone.

    Returns (vertex count, pairs) where pairs[x] is the edge of element x.
    Raises PreconditionError when the base is not a simple clique.
    """
    bit = 1 << e
    base_mask = host.full_mask ^ bit
    els = sorted(elements_of(base_mask))
    ne = len(els)
    r = host.r(base_mask)
    k = r + 1
    if ne != k * (k - 1) // 2:
        raise PreconditionError(
            f"base has {ne} elements but rank {r}; not a clique")
    for x in els:
        if host.r(1 << x) != 1:
            raise PreconditionError("base is not simple")
    pairs: _Pairs = [None] * host.size
    if r == 1:
        pairs[els[0]] = (0, 1)
        return 2, pairs
    if r == 2:
        # any bijection of three edges onto a triangle is a graph isomorphism
        for x, pq in zip(els, ((0, 1), (0, 2), (1, 2))):
            pairs[x] = pq
        return 3, pairs

    # adjacency: two edges share a vertex iff they extend to a triangle
    adj = [[False] * ne for _ in range(ne)]
    for i, j in itertools.combinations(range(ne), 2):
        mij = (1 << els[i]) | (1 << els[j])
        if host.r(mij) != 2:
            raise PreconditionError("base is not simple")
        for t in range(ne):
            if t != i and t != j and host.r(mij | (1 << els[t])) == 2:
                adj[i][j] = adj[j][i] = True
                break
    n0 = [t for t in range(1, ne) if adj[0][t]]
    if len(n0) != 2 * (k - 2):
        raise PreconditionError("base is not a clique: wrong edge degree")
    # split the neighbours of edge 0 into its two vertex stars
    g0 = n0[0]
    m0 = (1 << els[0]) | (1 << els[g0])
    star = [g0] + [t for t in n0[1:]
                   if adj[g0][t] and host.r(m0 | (1 << els[t])) == 3]
    if len(star) != k - 2:
        raise PreconditionError("base is not a clique: bad star split")
    pairs[els[0]] = (0, 1)
    label: dict[int, int] = {}
    for nxt, t in enumerate(sorted(star), start=2):
        pairs[els[t]] = (0, nxt)
        label[t] = nxt
    spokes = sorted(star)
    for t in range(1, ne):
        if t in label:
            continue
        ends = [label[a] for a in spokes if adj[t][a]]
        if len(ends) == 2:
            pairs[els[t]] = (ends[0], ends[1]) if ends[0] < ends[1] \
                else (ends[1], ends[0])
        elif len(ends) == 1:
            pairs[els[t]] = (1, ends[0])
        else:
            raise PreconditionError("base is not a clique: stray adjacency")
    if len({pairs[x] for x in els}) != ne:
        raise PreconditionError("base is not a clique: edge labels collide")
    # triangle closure check pins the labelling
    edge_of = {pairs[x]: x for x in els}
    for u, v, w in itertools.combinations(range(k), 3):
        tri = (1 << edge_of[(u, v)]) | (1 << edge_of[(u, w)]) \
            | (1 << edge_of[(v, w)])
        if host.r(tri) != 2:
            raise PreconditionError("base is not a clique: open triangle")
    return k, pairs


def _set_partitions(k: int):
    """Yield set partitions of range(k) as live lists of blocks."""
    blocks: list[list[int]] = []

    def rec(v: int):
        if v == k:
            yield blocks
            return
        for b in blocks:
            b.append(v)
            yield from rec(v + 1)
            b.pop()
        blocks.append([v])
        yield from rec(v + 1)
        blocks.pop()

    yield from rec(0)


def _components(fmask: int, pairs: _Pairs) -> list[list[int]]:
    """Vertex sets of the flat's components, each sorted, by least vertex."""
    par: dict[int, int] = {}

    def find(v: int) -> int:
        while par[v] != v:
            par[v] = par[par[v]]
            v = par[v]
        return v

    for x in elements_of(fmask):
        u, v = pairs[x]
        par.setdefault(u, u)
        par.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            par[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in par:
        groups.setdefault(find(v), []).append(v)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


# ---------------------------------------------------------------------------
# search


def _reduce(cur: Matroid, e: int, m: int, keep: tuple[int, ...],
            c_acc: frozenset, root: Matroid, transcript: list[dict],
            depth: int) -> Optional[ReductionResult]:
    if depth > _DEPTH_CAP:
        transcript.append({"event": "dead-end", "depth": depth,
                           "reason": "depth cap"})
        return None
    try:
        k, pairs = _clique_realization(cur, e)
    except PreconditionError as exc:
        transcript.append({"event": "dead-end", "depth": depth,
                           "reason": str(exc)})
        return None
    edge_of = {pairs[x]: x for x in range(cur.size) if pairs[x] is not None}
    ebit = 1 << e

    # flats of the base are the vertex partitions; keep those spanning e
    spanning: list[tuple[int, int]] = []
    for blocks in _set_partitions(k):
        fmask = 0
        for b in blocks:
            if len(b) >= 2:
                for u, v in itertools.combinations(b, 2):
                    fmask |= 1 << edge_of[(u, v)]
        if fmask == 0:
            continue
        rank = k - len(blocks)
        if cur.r(fmask | ebit) == rank:
            spanning.append((rank, fmask))
    spanning.sort()
    minimal: list[tuple[int, int]] = []
    for rank, fmask in spanning:
        if not any(g & ~fmask == 0 for _, g in minimal):
            minimal.append((rank, fmask))
    if not minimal:
        transcript.append({"event": "dead-end", "depth": depth,
                           "reason": "no flat spans the point"})
        return None
    transcript.append({
        "event": "minimal-flats", "depth": depth,
        "flats": [sorted(keep[x] for x in elements_of(g)) for _, g in minimal],
        "ranks": [rank for rank, _ in minimal],
    })
    r_f, fsel = minimal[0]
    comps = _components(fsel, pairs)
    t = len(comps)
    vset = sorted(v for c in comps for v in c)
    fhat = 0
    for u, v in itertools.combinations(vset, 2):
        fhat |= 1 << edge_of[(u, v)]
    rhat = len(vset) - 1
    corank = cur.full_rank() - rhat
    transcript.append({
        "event": "selected-flat", "depth": depth,
        "elements": sorted(keep[x] for x in elements_of(fsel)),
        "rank": r_f, "components": [len(c) for c in comps],
        "hull-rank": rhat, "corank": corank,
    })

    # connected modular hull with enough corank: the small configurations.
    # A triangle hull inside K_m has corank exactly m - 3, so that is the
    # weakest bound that still lets the leaves place their extra vertices.
    if corank >= m - 3:
        if t == 1 and r_f == 2:
            leaf = _triangle_leaf(e, comps[0], k, m, edge_of)
            if leaf is not None:
                return _finish(root, keep, c_acc, transcript, depth, m, *leaf)
        if rhat == 3:
            outside = [x for x in range(cur.size)
                       if x != e and not (1 << x) & fhat]
            sub, _ = minor_with_map(cur, (), outside)
            if is_isomorphic(sub, fano()):
                leaf = _square_leaf(e, vset, k, m, edge_of)
                if leaf is not None:
                    return _finish(root, keep, c_acc, transcript, depth, m,
                                   *leaf)
        if rhat >= 3:
            for f in sorted(elements_of(fhat)):
                child = _child(cur, e, keep, c_acc, (f,), ())
                if child is None:
                    continue
                transcript.append({"event": "contract", "depth": depth,
                                   "element": keep[f]})
                h2, e2, keep2, c2 = child
                res = _reduce(h2, e2, m, keep2, c2, root, transcript,
                              depth + 1)
                if res is not None:
                    return res
    else:
        transcript.append({"event": "hull-too-large", "depth": depth,
                           "corank": corank, "needed": m - 3})

    # a single component already carries an (m-1)-independent set
    for comp in comps:
        if len(comp) - 1 >= m - 1:
            leaf = _free_leaf(e, comp, comps, fsel, m, pairs, edge_of)
            return _finish(root, keep, c_acc, transcript, depth, m, *leaf)

    # merge the first two components across a cross edge and recurse
    if t >= 2:
        cross = min(edge_of[(u, v) if u < v else (v, u)]
                    for u in comps[0] for v in comps[1])
        cset = [cross]
        for comp in comps[2:]:
            cset.extend(_tree_edges(comp, fsel, pairs))
        dels = [x for x in range(cur.size)
                if x != e and not (1 << x) & fhat]
        child = _child(cur, e, keep, c_acc, tuple(cset), tuple(dels))
        if child is not None:
            transcript.append({"event": "cross-edge", "depth": depth,
                               "element": keep[cross],
                               "contracted": sorted(keep[x] for x in cset)})
            h2, e2, keep2, c2 = child
            res = _reduce(h2, e2, m, keep2, c2, root, transcript, depth + 1)
            if res is not None:
                return res

    transcript.append({"event": "dead-end", "depth": depth,
                       "reason": "no branch closed"})
    return None


def _child(cur: Matroid, e: int, keep: tuple[int, ...], c_acc: frozenset,
           cset: tuple[int, ...], dels: tuple[int, ...]):
    """Contract cset, delete dels, then simplify the base keeping e.

    Returns (child, e', keep', c_acc') or None when the point degenerates.
    """
    mc, keepc = minor_with_map(cur, cset, dels)
    e_mc = keepc.index(e)
    if not _check_position(mc, e_mc):
        return None
    junk = []
    reps: list[int] = []
    for x in range(mc.size):
        if x == e_mc:
            continue
        xb = 1 << x
        if mc.r(xb) == 0:
            junk.append(x)
            continue
        if any(mc.r((1 << y) | xb) == 1 for y in reps):
            junk.append(x)
        else:
            reps.append(x)
    h2, keep2 = minor_with_map(mc, (), junk)
    keep_out = tuple(keep[keepc[j]] for j in keep2)
    c_out = c_acc | {keep[x] for x in cset}
    return h2, keep2.index(e_mc), keep_out, c_out


def _tree_edges(comp: list[int], fmask: int, pairs: _Pairs) -> list[int]:
    """Lex-least spanning tree of one component, as host elements."""
    par = {v: v for v in comp}

    def find(v: int) -> int:
        while par[v] != v:
            par[v] = par[par[v]]
            v = par[v]
        return v

    cs = set(comp)
    out = []
    for x in sorted(elements_of(fmask)):
        u, v = pairs[x]
        if u in cs and v in cs:
            ru, rv = find(u), find(v)
            if ru != rv:
                par[ru] = rv
                out.append(x)
    return out


# ---------------------------------------------------------------------------
# leaves: each returns (kind, target, contract-elements, mapping)


def _triangle_leaf(e: int, comp: list[int], k: int, m: int,
                   edge_of: dict) -> Optional[tuple]:
    verts = sorted(comp)
    others = [v for v in range(k) if v not in comp]
    worder = verts + others[:m - 3]
    if len(worder) < m:
        return None
    mapping = _clique_mapping(worder, m, edge_of)
    mapping.append((m * (m - 1) // 2, e))
    return "triangle", triangle_ext(m), (), mapping


def _square_leaf(e: int, vset: list[int], k: int, m: int,
                 edge_of: dict) -> Optional[tuple]:
    others = [v for v in range(k) if v not in vset]
    worder = sorted(vset) + others[:m + 1 - 4]
    if len(worder) < m + 1:
        return None
    mapping = _clique_mapping(worder, m + 1, edge_of)
    mapping.append(((m + 1) * m // 2, e))
    return "square", square_ext(m + 1), (), mapping


def _free_leaf(e: int, comp: list[int], comps: list[list[int]], fmask: int,
               m: int, pairs: _Pairs, edge_of: dict) -> tuple:
    tree = _tree_edges(comp, fmask, pairs)
    kept, contracted = tree[:m - 1], tree[m - 1:]
    cset = list(contracted)
    for other in comps:
        if other is not comp:
            cset.extend(_tree_edges(other, fmask, pairs))
    # groups: vertices of the component merged along the contracted tree
    par = {v: v for v in comp}

    def find(v: int) -> int:
        while par[v] != v:
            par[v] = par[par[v]]
            v = par[v]
        return v

    for x in contracted:
        u, v = pairs[x]
        par[find(u)] = find(v)
    roots: dict[int, int] = {}
    for v in sorted(comp):
        roots.setdefault(find(v), len(roots))
    gid = {v: roots[find(v)] for v in comp}
    cs = set(comp)
    reps: dict[tuple[int, int], int] = {}
    for x in sorted(elements_of(fmask)):
        u, v = pairs[x]
        if u in cs and v in cs and gid[u] != gid[v]:
            key = (min(gid[u], gid[v]), max(gid[u], gid[v]))
            reps.setdefault(key, x)
    mapping = [(i, reps[(a, b)])
               for i, (a, b) in enumerate(itertools.combinations(range(m), 2))]
    mapping.append((m * (m - 1) // 2, e))
    return "free", free_ext_clique(m), tuple(cset), mapping


def _clique_mapping(worder: list[int], m: int, edge_of: dict) -> list:
    out = []
    for i, (a, b) in enumerate(itertools.combinations(range(m), 2)):
        u, v = worder[a], worder[b]
        out.append((i, edge_of[(u, v) if u < v else (v, u)]))
    return out


def _finish(root: Matroid, keep: tuple[int, ...], c_acc: frozenset,
            transcript: list[dict], depth: int, m: int, kind: str,
            target: Matroid, cset: tuple[int, ...],
            mapping: list) -> ReductionResult:
    contract = frozenset(c_acc | {keep[x] for x in cset})
    pairs = tuple(sorted((ti, keep[h]) for ti, h in mapping))
    image = {h for _, h in pairs}
    delete = frozenset(set(range(root.size)) - contract - image)
    cert = MinorCertificate(contract, delete, pairs)
    validated = target.size <= 20
    if validated and not validate_certificate(cert, root, target):
        raise RuntimeError("reduction built an invalid certificate")
    transcript.append({"event": "leaf", "depth": depth, "family": kind,
                       "target": target.name, "validated": validated})
    return ReductionResult(kind, target, cert, tuple(transcript), m)
