"""Small hand-built plane graphs used by the checks, demos and tests."""

from __future__ import annotations

import math

from .cylinder import make_grid
from .embedding import (
    PlanarEmbedding,
    add_edge_in_face,
    build_embedding,
    embedding_from_faces,
    embedding_from_coordinates,
    subdivide_edge,
)


def cycle_graph(k: int) -> PlanarEmbedding:
    return build_embedding([[(v - 1) % k, (v + 1) % k] for v in range(k)])


def path_graph(n: int) -> PlanarEmbedding:
    return build_embedding([[u for u in (v - 1, v + 1) if 0 <= u < n] for v in range(n)])


def complete4() -> PlanarEmbedding:
    # 0, 1, 2 outer triangle, 3 in the middle
    return embedding_from_coordinates([(0, 2), (2, -1), (-2, -1), (0, 0)],
                                      [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])


def octahedron() -> PlanarEmbedding:
    pts = [(0, 4), (-3.5, -2), (3.5, -2), (0, -1), (1, 0.5), (-1, 0.5)]
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
             (0, 4), (0, 5), (1, 5), (1, 3), (2, 3), (2, 4)]
    return embedding_from_coordinates(pts, edges)


def icosahedron() -> PlanarEmbedding:
    """Twelve vertices, thirty edges, twenty triangular faces."""
    up = [1, 2, 3, 4, 5]
    low = [6, 7, 8, 9, 10]
    faces = []
    for q in range(5):
        u0, u1 = up[q], up[(q + 1) % 5]
        l0, l1 = low[q], low[(q + 1) % 5]
        faces += [(0, u0, u1), (u0, l0, u1), (u1, l0, l1), (11, l1, l0)]
    return embedding_from_faces(12, faces)


def grotzsch_adjacency() -> dict[int, list[int]]:
    """The Mycielskian of C5: 11 vertices, triangle-free, chromatic number 4."""
    adj: dict[int, set[int]] = {v: set() for v in range(11)}

    def join(a, b):
        adj[a].add(b)
        adj[b].add(a)

    for i in range(5):
        join(i, (i + 1) % 5)
        join(5 + i, (i + 1) % 5)
        join(5 + i, (i - 1) % 5)
        join(5 + i, 10)
    return {v: sorted(ns) for v, ns in adj.items()}


# -- hosts for the grid grower -------------------------------------------------

def perturbed_grid(r: int, s: int, kind: str, hoop: int) -> PlanarEmbedding:
    """``make_grid(r, s)`` with one face spoiled between hoops ``hoop`` and ``hoop + 1``.

    ``kind="subdivide"`` splits a rung, leaving two pentagons;
    ``kind="diagonal"`` adds a diagonal to a quad, leaving two triangles.
    """
    g = make_grid(r, s)
    e = g.embedding
    u, v = g.vertex(1, hoop), g.vertex(1, hoop + 1)
    if kind == "subdivide":
        return subdivide_edge(e, u, v)
    if kind == "diagonal":
        f = e.face_of(u, v)
        walk = e.faces[f].vertices
        i = walk.index(u)
        return add_edge_in_face(e, f, i, i + 2)
    raise ValueError(f"unknown perturbation {kind!r}")


def figure_eight_host(rings: int = 5, depth: int = 10) -> tuple[PlanarEmbedding, list[int]]:
    """Nested octagons around a figure eight of two nested-square stacks.

    Returns the embedding and the outermost octagon, meant as the source
    set.  Growing hoops inward from an octagon, the two octagon vertices
    on the vertical axis share their inward neighbour (the waist of the
    eight), which forces a restart on one lobe.
    """
    pts: list[tuple[float, float]] = []
    edges: list[tuple[int, int]] = []
    octs = []
    for k in range(rings):
        rad = 10.0 - k
        ids = []
        for q in range(8):
            a = math.radians(90 - 45 * q)     # q=0 top, then clockwise
            ids.append(len(pts))
            pts.append((rad * math.cos(a), rad * math.sin(a)))
        for q in range(8):
            edges.append((ids[q], ids[(q + 1) % 8]))
        if octs:
            edges += [(a, b) for a, b in zip(octs[-1], ids)]
        octs.append(ids)
    waist = len(pts)
    pts.append((0.0, 0.0))
    last = octs[-1]
    edges += [(last[0], waist), (last[4], waist)]
    for side, qs in ((1, (1, 2, 3)), (-1, (7, 6, 5))):
        prev = None
        for level in range(depth):
            rho = 2.0 * (1 - level / depth)
            c = (side * 2.0, 0.0)
            if level == 0:
                corner = [waist]
            else:
                corner = [len(pts)]
                pts.append((c[0] - side * rho, 0.0))
            rest = []
            for dx, dy in ((0, 1), (side, 0), (0, -1)):
                rest.append(len(pts))
                pts.append((c[0] + dx * rho, c[1] + dy * rho))
            sq = corner + rest
            for q in range(4):
                edges.append((sq[q], sq[(q + 1) % 4]))
            if level == 0:
                edges += [(last[q], v) for q, v in zip(qs, rest)]
            else:
                edges += [(a, b) for a, b in zip(prev, sq)]
            prev = sq
    return embedding_from_coordinates(pts, edges), octs[0]


# -- instances for the identification criterion ----------------------------------

def distcrit_instance(d: int, t: int) -> tuple[dict[int, list[int]], list[list[int]], list[int]]:
    """A graph, a family ``[S0, S1, S2]`` and a 4-cycle meeting the criterion.

    ``S0`` is an edge ``ab`` with paths of length ``t`` to ``v1`` and
    ``v2``; the 4-cycle is ``v1 v2 v3 v4`` and single vertices ``S1``,
    ``S2`` hang off ``v3``, ``v4`` by paths of length ``2d - 1 - t``.
    Identifying either diagonal brings two family members within
    ``2d - 1``, and ``v1, v2`` sit at distance ``t`` from ``S0``.
    """
    if not 0 <= t <= d - 1:
        raise ValueError("need 0 <= t <= d - 1")
    adj: dict[int, set[int]] = {}

    def join(x, y):
        adj.setdefault(x, set()).add(y)
        adj.setdefault(y, set()).add(x)

    counter = [0]

    def fresh():
        counter[0] += 1
        return counter[0] - 1

    a, b = fresh(), fresh()
    join(a, b)

    def path_from(x, length):
        for _ in range(length):
            y = fresh()
            join(x, y)
            x = y
        return x

    v1 = path_from(a, t)
    v2 = path_from(b, t)
    v3, v4 = fresh(), fresh()
    join(v1, v2)
    join(v2, v3)
    join(v3, v4)
    join(v4, v1)
    L = 2 * d - 1 - t
    s1 = path_from(v3, L)
    s2 = path_from(v4, L)
    return {v: sorted(ns) for v, ns in sorted(adj.items())}, [[a, b], [s1], [s2]], [v1, v2, v3, v4]
