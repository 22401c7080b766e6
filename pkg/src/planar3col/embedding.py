"""Plane graphs stored as rotation systems.

A :class:`PlanarEmbedding` keeps, for every vertex, the clockwise cyclic
order of its neighbours.  Faces are traced with the rule "from the dart
``u -> v`` continue with the neighbour of ``v`` that follows ``u``
clockwise".  With that rule a face lies on the left of each of its darts,
and the traced order of a face walk is what the rest of the package calls
the clockwise order of that face.

Functions that only need adjacency (distances, triangles, identification)
accept either an embedding or a plain ``{vertex: neighbours}`` mapping.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

INF = math.inf

Adjacency = Mapping[int, Iterable[int]]


class EmbeddingError(ValueError):
    """Raised for malformed rotation tables."""


class AsymmetricAdjacency(EmbeddingError):
    pass


class DuplicateNeighbor(EmbeddingError):
    pass


class SelfLoop(EmbeddingError):
    pass


class InvalidVertex(EmbeddingError):
    pass


class DisconnectedEmbedding(EmbeddingError):
    """Face-based operations need a connected plane graph."""


class NotACycle(ValueError):
    pass


class AdjacentPair(ValueError):
    """Identifying two adjacent vertices would create a loop."""


class EmptySet(ValueError):
    pass


def _canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    if not seq:
        return ()
    k = min(range(len(seq)), key=seq.__getitem__)
    return tuple(seq[k:]) + tuple(seq[:k])


@dataclass(frozen=True)
class FaceWalk:
    """Closed boundary walk of a face, as a cyclic tuple of darts."""

    darts: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.darts)

    def is_cycle(self) -> bool:
        vs = self.vertices
        return len(vs) >= 3 and len(set(vs)) == len(vs)

    def __len__(self) -> int:
        return len(self.darts)


class PlanarEmbedding:
    """Immutable rotation system on vertices ``0..n-1``.

    Each rotation is stored starting at its smallest neighbour so that two
    tables describing the same embedding compare equal.
    """

    def __init__(self, rotations: Sequence[Sequence[int]]):
        n = len(rotations)
        rots = []
        for v, rot in enumerate(rotations):
            rot = [int(x) for x in rot]
            for u in rot:
                if not 0 <= u < n:
                    raise InvalidVertex(f"vertex {v} lists unknown neighbour {u}")
                if u == v:
                    raise SelfLoop(f"vertex {v} lists itself")
            if len(set(rot)) != len(rot):
                raise DuplicateNeighbor(f"vertex {v} lists a neighbour twice: {rot}")
            rots.append(_canonical_cycle(rot))
        index = [{u: k for k, u in enumerate(rot)} for rot in rots]
        for v, rot in enumerate(rots):
            for u in rot:
                if v not in index[u]:
                    raise AsymmetricAdjacency(f"{v} lists {u} but {u} does not list {v}")
        self.rotations: tuple[tuple[int, ...], ...] = tuple(rots)
        self._index = index

    @property
    def n(self) -> int:
        return len(self.rotations)

    vertex_count = n

    def __len__(self) -> int:
        return len(self.rotations)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlanarEmbedding) and self.rotations == other.rotations

    def __hash__(self) -> int:
        return hash(self.rotations)

    def __repr__(self) -> str:
        return f"PlanarEmbedding(n={self.n}, m={self.num_edges})"

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._index[u]

    def succ(self, v: int, u: int) -> int:
        """Neighbour of ``v`` that follows ``u`` clockwise."""
        rot = self.rotations[v]
        return rot[(self._index[v][u] + 1) % len(rot)]

    def pred(self, v: int, u: int) -> int:
        rot = self.rotations[v]
        return rot[(self._index[v][u] - 1) % len(rot)]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((u, v) for u, rot in enumerate(self.rotations) for v in rot if u < v))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> dict[int, frozenset[int]]:
        return {v: frozenset(rot) for v, rot in enumerate(self.rotations)}

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.rotations[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    @cached_property
    def faces(self) -> tuple[FaceWalk, ...]:
        return tuple(trace_faces(self))

    @cached_property
    def dart_face(self) -> dict[tuple[int, int], int]:
        """Index of the face whose walk contains each dart."""
        return {d: i for i, f in enumerate(self.faces) for d in f.darts}

    def face_of(self, u: int, v: int) -> int:
        return self.dart_face[(u, v)]


def build_embedding(rotation_table: Union[Sequence[Sequence[int]], Mapping[int, Sequence[int]]]) -> PlanarEmbedding:
    """Validate a rotation table (list indexed by vertex, or a dict)."""
    if isinstance(rotation_table, Mapping):
        n = max(rotation_table, default=-1) + 1
        missing = set(range(n)) - set(rotation_table)
        if missing or any(k < 0 for k in rotation_table):
            raise InvalidVertex(f"vertex ids must be dense from 0; missing {sorted(missing)}")
        rotation_table = [rotation_table[v] for v in range(n)]
    return PlanarEmbedding(rotation_table)


def embedding_from_faces(n: int, faces: Iterable[Sequence[int]]) -> PlanarEmbedding:
    """Rotation system of a 2-cell map given its faces in traced order.

    Every dart must occur in exactly one face; the walk ``a, b, c`` means
    ``c`` follows ``a`` clockwise around ``b``.
    """
    nxt: list[dict[int, int]] = [dict() for _ in range(n)]
    for face in faces:
        k = len(face)
        for i in range(k):
            a, b, c = face[i - 1], face[i], face[(i + 1) % k]
            if a in nxt[b]:
                raise EmbeddingError(f"dart {a}->{b} appears in two faces")
            nxt[b][a] = c
    rots = []
    for v in range(n):
        succ = nxt[v]
        if not succ:
            rots.append([])
            continue
        start = min(succ)
        rot = [start]
        u = succ[start]
        while u != start:
            rot.append(u)
            u = succ[u]
        if len(rot) != len(succ):
            raise EmbeddingError(f"faces around vertex {v} do not close into one rotation")
        rots.append(rot)
    return PlanarEmbedding(rots)


def embedding_from_coordinates(points: Sequence[tuple[float, float]], edges: Iterable[tuple[int, int]]) -> PlanarEmbedding:
    """Rotation system of a crossing-free straight-line drawing.

    Neighbours are sorted clockwise by angle.  Crossings are not detected.
    """
    nbrs: list[list[int]] = [[] for _ in points]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rots = []
    for v, (x, y) in enumerate(points):
        rots.append(sorted(nbrs[v], key=lambda u: -math.atan2(points[u][1] - y, points[u][0] - x)))
    return PlanarEmbedding(rots)


def _insert_after(rot: Sequence[int], anchor: int, new: int) -> list[int]:
    rot = list(rot)
    rot.insert(rot.index(anchor) + 1, new)
    return rot


def add_edge_in_face(e: PlanarEmbedding, face: int, i: int, j: int) -> PlanarEmbedding:
    """Join the corners at positions ``i`` and ``j`` of a face walk by a new edge.

    The edge is drawn inside the face, splitting it in two.  The corner at
    position ``i`` sits between the darts entering and leaving
    ``walk[i]``; the new neighbour goes right after the previous walk
    vertex in the rotation.
    """
    walk = e.faces[face].vertices
    k = len(walk)
    a, b = walk[i % k], walk[j % k]
    if a == b or e.has_edge(a, b):
        raise EmbeddingError(f"cannot add edge {a}-{b}")
    rots = [list(r) for r in e.rotations]
    rots[a] = _insert_after(rots[a], walk[(i - 1) % k], b)
    rots[b] = _insert_after(rots[b], walk[(j - 1) % k], a)
    return PlanarEmbedding(rots)


def add_pendant(e: PlanarEmbedding, face: int, i: int) -> PlanarEmbedding:
    """New vertex ``n`` joined to the corner at position ``i`` of a face walk."""
    walk = e.faces[face].vertices
    a = walk[i % len(walk)]
    rots = [list(r) for r in e.rotations] + [[a]]
    rots[a] = _insert_after(rots[a], walk[(i - 1) % len(walk)], e.n) if rots[a] else [e.n]
    return PlanarEmbedding(rots)


def add_vertex_in_face(e: PlanarEmbedding, face: int, positions: Sequence[int]) -> PlanarEmbedding:
    """New vertex ``n`` inside a face, joined to the corners at ``positions`` of its walk."""
    walk = e.faces[face].vertices
    k = len(walk)
    pos = sorted({p % k for p in positions})
    corners = [walk[p] for p in pos]
    if len(set(corners)) != len(corners):
        raise EmbeddingError("a vertex would be joined twice to the same corner vertex")
    x = e.n
    rots = [list(r) for r in e.rotations]
    for p in pos:
        rots[walk[p]] = _insert_after(rots[walk[p]], walk[(p - 1) % k], x)
    rots.append(corners[::-1])
    return PlanarEmbedding(rots)


def subdivide_edge(e: PlanarEmbedding, u: int, v: int) -> PlanarEmbedding:
    """Replace the edge ``uv`` by a path ``u x v`` through the new vertex ``x = n``."""
    if not e.has_edge(u, v):
        raise EmbeddingError(f"no edge {u}-{v}")
    x = e.n
    rots = [list(r) for r in e.rotations]
    rots[u][rots[u].index(v)] = x
    rots[v][rots[v].index(u)] = x
    rots.append([u, v])
    return PlanarEmbedding(rots)


def trace_faces(e: PlanarEmbedding) -> list[FaceWalk]:
    """All face walks, each starting at its smallest dart, sorted by that dart."""
    if not e.is_connected():
        raise DisconnectedEmbedding("face tracing needs a connected embedding")
    seen: set[tuple[int, int]] = set()
    faces = []
    for u, rot in enumerate(e.rotations):
        for v in rot:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append((a, b))
                a, b = b, e.succ(b, a)
            k = min(range(len(walk)), key=walk.__getitem__)
            faces.append(FaceWalk(tuple(walk[k:] + walk[:k])))
    faces.sort(key=lambda f: f.darts[0])
    return faces


def euler_characteristic(e: PlanarEmbedding) -> int:
    """V - E + F; 2 for every connected plane graph (F = 1 for a lone vertex)."""
    f = len(e.faces) if e.num_edges else 1
    return e.n - e.num_edges + f


# -- adjacency-level helpers -------------------------------------------------

def as_adjacency(g: Union[PlanarEmbedding, Adjacency]) -> Mapping[int, Iterable[int]]:
    if isinstance(g, PlanarEmbedding):
        return dict(enumerate(g.rotations))
    return g


def bfs_distances(g: Union[PlanarEmbedding, Adjacency], sources: Iterable[int]) -> dict[int, int]:
    """Distance from the source set to every reachable vertex."""
    adj = as_adjacency(g)
    dist = {}
    queue = deque()
    for s in sources:
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def set_distance(g: Union[PlanarEmbedding, Adjacency], X: Iterable[int], Y: Iterable[int]) -> Union[int, float]:
    """Largest d such that every X-Y path has length at least d.

    That is the usual shortest-path distance between the sets; ``INF`` when
    no path exists.
    """
    X, Y = set(X), set(Y)
    if not X or not Y:
        raise EmptySet("set_distance needs two nonempty vertex sets")
    dist = bfs_distances(g, X)
    return min((dist[y] for y in Y if y in dist), default=INF)


def find_triangles(g: Union[PlanarEmbedding, Adjacency]) -> list[tuple[int, int, int]]:
    adj = {v: set(ns) for v, ns in as_adjacency(g).items()}
    out = []
    for u in sorted(adj):
        for v in adj[u]:
            if v <= u:
                continue
            for w in adj[u] & adj[v]:
                if w > v:
                    out.append((u, v, w))
    out.sort()
    return out


def min_triangle_pair_distance(g: Union[PlanarEmbedding, Adjacency]) -> Union[int, float]:
    tris = find_triangles(g)
    best: Union[int, float] = INF
    for i, t in enumerate(tris):
        if i + 1 == len(tris):
            break
        dist = bfs_distances(g, t)
        for other in tris[i + 1:]:
            best = min(best, min((dist[x] for x in other if x in dist), default=INF))
    return best


def check_cycle(g: Union[PlanarEmbedding, Adjacency], cycle: Sequence[int]) -> None:
    adj = as_adjacency(g)
    k = len(cycle)
    if k < 3:
        raise NotACycle(f"a cycle needs at least 3 vertices, got {list(cycle)}")
    if len(set(cycle)) != k:
        raise NotACycle(f"repeated vertex in {list(cycle)}")
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        if a not in adj or b not in set(adj[a]):
            raise NotACycle(f"{a} and {b} are not adjacent")


def is_induced_cycle(g: Union[PlanarEmbedding, Adjacency], cycle: Sequence[int]) -> bool:
    check_cycle(g, cycle)
    return not find_chords(g, cycle)


def find_chords(g: Union[PlanarEmbedding, Adjacency], cycle: Sequence[int]) -> list[tuple[int, int]]:
    adj = as_adjacency(g)
    pos = {v: i for i, v in enumerate(cycle)}
    k = len(cycle)
    chords = []
    for v, i in pos.items():
        for u in adj[v]:
            j = pos.get(u)
            if j is not None and i < j and (j - i) % k not in (1, k - 1):
                chords.append((v, u) if v < u else (u, v))
    return sorted(set(chords))


def identify_vertices(g: Union[PlanarEmbedding, Adjacency], u: int, v: int) -> dict[int, frozenset[int]]:
    """Merge ``v`` into ``u``; parallel edges collapse, ``v`` disappears.

    The result is an abstract simple graph keyed by the surviving ids.
    """
    adj = as_adjacency(g)
    if u == v:
        raise ValueError("cannot identify a vertex with itself")
    if v in set(adj[u]):
        raise AdjacentPair(f"{u} and {v} are adjacent")
    out: dict[int, set[int]] = {}
    for x, ns in adj.items():
        if x == v:
            continue
        out[x] = {u if y == v else y for y in ns}
    out[u] |= set(adj[v])
    out[u].discard(u)
    return {x: frozenset(ns) for x, ns in out.items()}


def cycle_sides(e: PlanarEmbedding, cycle: Sequence[int]) -> tuple[set[int], set[int]]:
    """Vertices strictly on the left and right of a cycle traversed in order.

    "Left" is the side holding the faces of the darts ``c[i] -> c[i+1]``.
    """
    check_cycle(e, cycle)
    k = len(cycle)
    cyc_edges = {frozenset((cycle[i], cycle[(i + 1) % k])) for i in range(k)}
    on_cycle = set(cycle)

    def region(seed_faces: set[int]) -> set[int]:
        faces = set(seed_faces)
        stack = list(seed_faces)
        while stack:
            f = stack.pop()
            for a, b in e.faces[f].darts:
                if frozenset((a, b)) in cyc_edges:
                    continue
                g = e.dart_face[(b, a)]
                if g not in faces:
                    faces.add(g)
                    stack.append(g)
        return {x for f in faces for x in e.faces[f].vertices} - on_cycle

    left = region({e.dart_face[(cycle[i], cycle[(i + 1) % k])] for i in range(k)})
    right = region({e.dart_face[(cycle[(i + 1) % k], cycle[i])] for i in range(k)})
    return left, right


def is_separating_cycle(e: PlanarEmbedding, cycle: Sequence[int]) -> bool:
    left, right = cycle_sides(e, cycle)
    return bool(left) and bool(right)


# -- text format -------------------------------------------------------------

ROT_HEADER = "planar-rot v1"


def format_embedding(e: PlanarEmbedding) -> str:
    lines = [ROT_HEADER]
    for v, rot in enumerate(e.rotations):
        lines.append(f"{v}:" + "".join(f" {u}" for u in rot))
    return "\n".join(lines) + "\n"


def parse_embedding(text: str) -> PlanarEmbedding:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != ROT_HEADER:
        raise EmbeddingError(f"expected header {ROT_HEADER!r}")
    table: dict[int, list[int]] = {}
    for ln in lines[1:]:
        head, sep, rest = ln.partition(":")
        if not sep:
            raise EmbeddingError(f"malformed line {ln!r}")
        try:
            v = int(head)
            table[v] = [int(t) for t in rest.split()]
        except ValueError as exc:
            raise EmbeddingError(f"malformed line {ln!r}") from exc
    return build_embedding(table)


def read_embedding(path) -> PlanarEmbedding:
    with open(path) as fh:
        return parse_embedding(fh.read())


def write_embedding(e: PlanarEmbedding, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_embedding(e))
