"""Plane graph generators working directly on rotation systems.

Exhaustive mode grows every plane tree on ``n`` vertices and then adds
edges inside faces one at a time, discarding duplicates by a canonical
code after every step.  Each connected plane graph with ``m`` edges is
reached from one with ``m - 1`` edges by deleting a non-bridge edge, so
the levels are complete.  The supported constraints are inherited by
subgraphs, so violating maps are pruned as soon as they appear.

Two maps are treated as the same when an orientation preserving or
reversing relabelling maps one to the other.
"""

from __future__ import annotations

import random
from typing import Callable, Iterator, Optional, Sequence

from .embedding import (
    PlanarEmbedding,
    _insert_after,
    add_edge_in_face,
    add_pendant,
    add_vertex_in_face,
    build_embedding,
    find_triangles,
    min_triangle_pair_distance,
)

CONSTRAINTS = ("none", "triangle_free", "max_one_triangle", "min_triangle_distance")


class InfeasibleConstraint(ValueError):
    pass


Rotations = tuple[tuple[int, ...], ...]


def _code_from(rots: Sequence[Sequence[int]], u: int, v: int, mirror: bool, bound: Optional[list] = None) -> Optional[list]:
    """Relabel by breadth-first search from the dart ``u -> v``.

    With ``bound`` given, gives up (returns ``None``) as soon as the code
    is known to exceed it.
    """
    label = {u: 0}
    order = [u]
    first = {u: v}
    out: list[int] = []
    tied = bound is not None
    pos = 0
    for x in order:
        rot = rots[x]
        if mirror:
            rot = rot[::-1]
        k = rot.index(first[x])
        for y in rot[k:] + rot[:k]:
            c = label.get(y)
            if c is None:
                c = label[y] = len(order)
                order.append(y)
                first[y] = x
            out.append(c)
            if tied:
                b = bound[pos]
                if c > b:
                    return None
                if c < b:
                    tied = False
            pos += 1
        out.append(-1)
        if tied:
            b = bound[pos]
            if b != -1:
                # -1 sorts first, so this code is smaller
                tied = False
        pos += 1
    return out


def canonical_code(rots: Sequence[Sequence[int]], mirror: bool = True) -> tuple:
    """A code equal for two connected maps iff they are isomorphic.

    With ``mirror`` (the default) a map and its mirror image get the same
    code.  Only darts leaving a vertex of maximum degree towards a
    neighbour of maximum degree are tried as starting points.
    """
    rots = [tuple(r) for r in rots]
    if len(rots) == 1:
        return (-1,)
    deg = [len(r) for r in rots]
    top = max(deg)
    starts = [u for u in range(len(rots)) if deg[u] == top]
    top2 = max(deg[v] for u in starts for v in rots[u])
    best = None
    for u in starts:
        for v in rots[u]:
            if deg[v] != top2:
                continue
            for m in ((False, True) if mirror else (False,)):
                c = _code_from(rots, u, v, m, best)
                if c is not None:
                    best = c
    return tuple(best)


def _satisfies(e: PlanarEmbedding, constraint: str, delta: int) -> bool:
    if constraint == "none":
        return True
    if constraint == "triangle_free":
        return not find_triangles(e)
    if constraint == "max_one_triangle":
        return len(find_triangles(e)) <= 1
    if constraint == "min_triangle_distance":
        return min_triangle_pair_distance(e) >= delta
    raise ValueError(f"unknown constraint {constraint!r}; expected one of {CONSTRAINTS}")


def _new_triangle(e: PlanarEmbedding, a: int, b: int) -> bool:
    return bool(set(e.neighbors(a)) & set(e.neighbors(b)))


def _check_args(n: int, constraint: str, delta: int) -> None:
    if constraint not in CONSTRAINTS:
        raise ValueError(f"unknown constraint {constraint!r}; expected one of {CONSTRAINTS}")
    if n < 1:
        raise ValueError("n must be positive")
    if constraint == "min_triangle_distance" and delta < 0:
        raise InfeasibleConstraint("triangle distance cannot be negative")


def plane_trees(n: int, mirror: bool = True) -> list[PlanarEmbedding]:
    """All plane trees on ``n`` vertices up to isomorphism (and reflection with ``mirror``)."""
    level = {(-1,): build_embedding([[]])}
    for size in range(2, n + 1):
        nxt: dict[tuple, PlanarEmbedding] = {}
        for t in level.values():
            if t.n == 1:
                cands = [build_embedding([[1], [0]])]
            else:
                walk = t.faces[0]
                cands = [add_pendant(t, 0, i) for i in range(walk.length)]
            for c in cands:
                nxt.setdefault(canonical_code(c.rotations, mirror), c)
        level = nxt
    return [level[k] for k in sorted(level)]


def _edge_extensions(e: PlanarEmbedding) -> Iterator[tuple[int, int, int]]:
    for f, walk in enumerate(e.faces):
        vs = walk.vertices
        k = len(vs)
        for i in range(k):
            for j in range(i + 1, k):
                a, b = vs[i], vs[j]
                if a != b and not e.has_edge(a, b):
                    yield f, i, j


def exhaustive_maps(
    n: int,
    constraint: str = "none",
    delta: int = 0,
    max_edges: Optional[int] = None,
    keep: Optional[Callable[[PlanarEmbedding], bool]] = None,
) -> Iterator[PlanarEmbedding]:
    """Every connected simple plane graph on ``n`` vertices satisfying the constraint.

    Yields by increasing edge count, and within a level by canonical code.
    ``keep`` may prune further but must be inherited by subgraphs that
    keep all vertices.
    """
    _check_args(n, constraint, delta)
    level = {canonical_code(t.rotations): t for t in plane_trees(n)}
    level = {k: t for k, t in level.items() if keep is None or keep(t)}
    top = 3 * n - 6 if n >= 3 else n - 1
    if max_edges is not None:
        top = min(top, max_edges)
    m = n - 1
    while level:
        for k in sorted(level):
            yield level[k]
        if m >= top:
            return
        nxt: dict[tuple, PlanarEmbedding] = {}
        for e in level.values():
            base = [list(r) for r in e.rotations]
            tri = len(find_triangles(e)) if constraint == "max_one_triangle" else 0
            for f, i, j in _edge_extensions(e):
                vs = e.faces[f].vertices
                k = len(vs)
                a, b = vs[i], vs[j]
                common = len(set(base[a]) & set(base[b]))
                if constraint == "triangle_free" and common:
                    continue
                if constraint == "max_one_triangle" and tri + common > 1:
                    continue
                rots = list(base)
                rots[a] = _insert_after(base[a], vs[(i - 1) % k], b)
                rots[b] = _insert_after(base[b], vs[(j - 1) % k], a)
                code = canonical_code(rots)
                if code in nxt:
                    continue
                c = PlanarEmbedding(rots)
                if not _satisfies(c, constraint, delta):
                    continue
                if keep is not None and not keep(c):
                    continue
                nxt[code] = c
        level = nxt
        m += 1


def random_map(
    n: int,
    rng: random.Random,
    constraint: str = "none",
    delta: int = 0,
    density: Optional[float] = None,
) -> PlanarEmbedding:
    """A random connected plane graph on ``n`` vertices.

    A random plane tree is grown by pendant insertion; then edges are
    added inside random faces between random corners, skipping any that
    would break the constraint, until ``density * (3n - 6)`` edges or no
    progress.  ``density`` defaults to a uniform draw.
    """
    _check_args(n, constraint, delta)
    e = build_embedding([[]])
    if n >= 2:
        e = build_embedding([[1], [0]])
    while e.n < n:
        f = rng.randrange(len(e.faces))
        e = add_pendant(e, f, rng.randrange(e.faces[f].length))
    if n < 3:
        return e
    if density is None:
        density = rng.random()
    target = (n - 1) + round(density * (3 * n - 6 - (n - 1)))
    misses = 0
    while e.num_edges < target and misses < 30:
        f = rng.randrange(len(e.faces))
        walk = e.faces[f].vertices
        k = len(walk)
        i, j = rng.randrange(k), rng.randrange(k)
        a, b = walk[i], walk[j]
        if a == b or e.has_edge(a, b):
            misses += 1
            continue
        if constraint == "triangle_free" and _new_triangle(e, a, b):
            misses += 1
            continue
        c = add_edge_in_face(e, f, i, j)
        if not _satisfies(c, constraint, delta):
            misses += 1
            continue
        e = c
        misses = 0
    return e


def random_two_connected_map(n: int, rng: random.Random, chord_rate: float = 0.3) -> PlanarEmbedding:
    """A random 2-connected plane graph on ``n >= 3`` vertices with mostly short faces.

    Starts from a triangle or a 4-cycle and repeatedly puts a vertex into
    a random face, joined to two or three of its corners so that short
    faces appear, or adds a chord to a long face.  Every face stays a cycle.
    """
    if n < 3:
        raise ValueError("need at least 3 vertices")
    k0 = 3 if n == 3 or rng.random() < 0.5 else 4
    e = build_embedding([[(v - 1) % k0, (v + 1) % k0] for v in range(k0)])
    while e.n < n or rng.random() < chord_rate:
        f = rng.randrange(len(e.faces))
        L = e.faces[f].length
        if e.n >= n or (L >= 4 and rng.random() < chord_rate):
            long = [i for i, w in enumerate(e.faces) if w.length >= 4]
            if not long:
                break
            f = rng.choice(long)
            L = e.faces[f].length
            i = rng.randrange(L)
            j = i + rng.choice([d for d in range(2, L - 1)])
            a, b = e.faces[f].vertices[i], e.faces[f].vertices[j % L]
            if not e.has_edge(a, b):
                e = add_edge_in_face(e, f, i, j)
            continue
        i = rng.randrange(L)
        gap = rng.choice([1, 2]) if L >= 3 else 1
        picks = [i, i + gap]
        if L >= 5 and rng.random() < 0.3:
            picks.append(i + gap + 2)
        e = add_vertex_in_face(e, f, picks)
    return e


def gen_planar(
    n: int,
    constraint: str = "none",
    delta: int = 0,
    exhaustive: bool = True,
    count: int = 100,
    seed: int = 0,
    n_min: Optional[int] = None,
) -> Iterator[PlanarEmbedding]:
    """Stream plane graphs with ``n_min .. n`` vertices (exhaustive) or exactly ``count``
    random ones with sizes drawn from that range.

    Every output is re-checked against the constraint.
    """
    _check_args(n, constraint, delta)
    lo = n if n_min is None else n_min
    if exhaustive:
        for size in range(lo, n + 1):
            for e in exhaustive_maps(size, constraint, delta):
                assert _satisfies(e, constraint, delta)
                yield e
        return
    rng = random.Random(seed)
    for _ in range(count):
        e = random_map(rng.randint(lo, n), rng, constraint, delta)
        assert _satisfies(e, constraint, delta)
        yield e
