"""Exact 3-coloring with precoloring, and checks built on it."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from .coloring import ThreeColoring, validate_coloring
from .embedding import Adjacency, PlanarEmbedding, as_adjacency, find_triangles

_BIT = {1: 1, 2: 2, 3: 4}
_COLORS_OF = {m: [c for c in (1, 2, 3) if m & _BIT[c]] for m in range(8)}
_POP = {m: bin(m).count("1") for m in range(8)}


@dataclass
class PrecoloringInstance:
    graph: Union[PlanarEmbedding, Adjacency]
    fixed: ThreeColoring = field(default_factory=dict)

    def solve(self) -> Optional[ThreeColoring]:
        return solve_3coloring(self.graph, self.fixed)


def _normalize(g) -> dict[int, list[int]]:
    return {v: sorted(ns) for v, ns in as_adjacency(g).items()}


def solve_3coloring(
    g: Union[PlanarEmbedding, Adjacency, PrecoloringInstance],
    precoloring: Optional[Mapping[int, int]] = None,
    rng: Optional[random.Random] = None,
) -> Optional[ThreeColoring]:
    """A proper 3-coloring extending ``precoloring``, or ``None`` if none exists.

    Backtracking over bitmask domains with forced-move propagation.  The
    branching vertex is the one with fewest remaining colors (ties: lowest
    id) and colors are tried in increasing order, so results are
    reproducible.  Passing ``rng`` shuffles the color order instead, which
    samples varied colorings.  A precoloring that is already improper
    raises ``ImproperColoring`` rather than returning ``None``.
    """
    if isinstance(g, PrecoloringInstance):
        g, precoloring = g.graph, g.fixed
    adj = _normalize(g)
    fixed = dict(precoloring or {})
    validate_coloring(adj, fixed, total=False)

    dom = {v: 7 for v in adj}

    def assign(dom: dict[int, int], v: int, c: int) -> bool:
        stack = [(v, c)]
        while stack:
            x, col = stack.pop()
            bit = _BIT[col]
            if not dom[x] & bit:
                return False
            dom[x] = bit
            for u in adj[x]:
                m = dom[u]
                if m & bit:
                    m &= ~bit
                    if not m:
                        return False
                    dom[u] = m
                    if _POP[m] == 1:
                        stack.append((u, _COLORS_OF[m][0]))
        return True

    for v, c in sorted(fixed.items()):
        if not assign(dom, v, c):
            return None

    def search(dom: dict[int, int]) -> Optional[dict[int, int]]:
        best, best_pop = None, 4
        for v in adj:
            p = _POP[dom[v]]
            if 1 < p < best_pop:
                best, best_pop = v, p
                if p == 2:
                    break
        if best is None:
            return dom
        order = _COLORS_OF[dom[best]]
        if rng is not None:
            order = rng.sample(order, len(order))
        for c in order:
            trial = dict(dom)
            if assign(trial, best, c):
                out = search(trial)
                if out is not None:
                    return out
        return None

    # ordered iteration over adj keys gives the lowest-id tie break
    adj = dict(sorted(adj.items()))
    out = search(dom)
    if out is None:
        return None
    phi = {v: _COLORS_OF[m][0] for v, m in out.items()}
    validate_coloring(adj, phi)
    return phi


def enumerate_3colorings(
    g: Union[PlanarEmbedding, Adjacency],
    precoloring: Optional[Mapping[int, int]] = None,
) -> np.ndarray:
    """Every proper 3-coloring by full ``3**n`` enumeration (rows in vertex order).

    Independent of the search solver; meant for small graphs only.
    """
    adj = _normalize(g)
    verts = sorted(adj)
    n = len(verts)
    if n > 13:
        raise ValueError(f"refusing to enumerate 3**{n} assignments")
    index = {v: i for i, v in enumerate(verts)}
    grid = np.indices((3,) * n, dtype=np.int8).reshape(n, -1).T + 1
    ok = np.ones(len(grid), dtype=bool)
    for v, c in (precoloring or {}).items():
        ok &= grid[:, index[v]] == c
    for u in verts:
        for w in adj[u]:
            if u < w:
                ok &= grid[:, index[u]] != grid[:, index[w]]
    return grid[ok]


def brute_force_3colorable(
    g: Union[PlanarEmbedding, Adjacency],
    precoloring: Optional[Mapping[int, int]] = None,
) -> bool:
    return len(enumerate_3colorings(g, precoloring)) > 0


def _without_edge(adj: Mapping[int, Sequence[int]], a: int, b: int) -> dict[int, list[int]]:
    out = {v: list(ns) for v, ns in adj.items()}
    out[a].remove(b)
    out[b].remove(a)
    return out


def _without_vertex(adj: Mapping[int, Sequence[int]], v: int) -> dict[int, list[int]]:
    return {x: [u for u in ns if u != v] for x, ns in adj.items() if x != v}


def is_critical(
    g: Union[PlanarEmbedding, Adjacency],
    C0: Iterable[int],
    phi0: Mapping[int, int],
) -> bool:
    """``phi0`` fails to extend to ``g`` but extends to every proper subgraph containing ``C0``.

    It suffices to try the subgraphs missing one edge outside ``C0`` or one
    isolated vertex outside ``C0``; every other proper subgraph sits inside
    one of those.
    """
    adj = _normalize(g)
    c0 = list(C0)
    k = len(c0)
    cset = set(c0)
    c_edges = {frozenset((c0[i], c0[(i + 1) % k])) for i in range(k)} if k >= 3 else set()
    if k == 2 and c0[1] in adj[c0[0]]:
        c_edges = {frozenset(c0)}
    fixed = {v: phi0[v] for v in c0}
    if solve_3coloring(adj, fixed) is not None:
        return False
    for a in adj:
        for b in adj[a]:
            if a < b and frozenset((a, b)) not in c_edges:
                if solve_3coloring(_without_edge(adj, a, b), fixed) is None:
                    return False
    for v in adj:
        if v not in cset and not adj[v]:
            if solve_3coloring(_without_vertex(adj, v), fixed) is None:
                return False
    return True


def mainlemma_statistic(e: PlanarEmbedding, C0: Optional[Sequence[int]] = None) -> tuple[int, int]:
    """``(sum of |f| over faces of length >= 5 plus the face of C0, number of triangles)``."""
    total = 0
    c0 = set(C0) if C0 else None
    counted_c0 = False
    for walk in e.faces:
        is_c0 = c0 is not None and not counted_c0 and walk.is_cycle() and set(walk.vertices) == c0 and walk.length == len(c0)
        if walk.length >= 5 or is_c0:
            total += walk.length
            counted_c0 = counted_c0 or is_c0
    if c0 is not None and not counted_c0:
        raise ValueError("C0 does not bound a face")
    return total, len(find_triangles(e))
