"""Distance layers around a vertex set and the faces they cut.

A 4-cycle is *S-tight* when it reads ``v1 v2 v3 v4`` with ``v1, v2`` at
distance ``t`` from ``S`` and ``v3, v4`` at distance ``t + 1``.  A cycle is
*equidistant* when all its vertices sit at one distance.  Layers of
S-tight faces stack into cylindrical grids, which
:func:`grow_cylindrical_grid` extracts.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Union

from .cylinder import CylGrid
from .embedding import (
    Adjacency,
    FaceWalk,
    PlanarEmbedding,
    as_adjacency,
    bfs_distances,
    check_cycle,
    cycle_sides,
    find_chords,
    identify_vertices,
    set_distance,
)
from .winding import NonCycleFace


@dataclass(frozen=True)
class BfsLayers:
    """Distance of every vertex to the source set (``None`` if unreachable)."""

    sources: frozenset[int]
    dist: tuple[Optional[int], ...]

    def __getitem__(self, v: int) -> Optional[int]:
        return self.dist[v]

    def layer(self, i: int) -> list[int]:
        return [v for v, d in enumerate(self.dist) if d == i]

    @property
    def depth(self) -> int:
        return max((d for d in self.dist if d is not None), default=0)

    def face_distance(self, face: FaceWalk) -> Optional[int]:
        ds = [self.dist[v] for v in face.vertices if self.dist[v] is not None]
        return min(ds) if ds else None


def bfs_layers(e: PlanarEmbedding, sources: Iterable[int]) -> BfsLayers:
    S = frozenset(sources)
    if not S:
        raise ValueError("source set is empty")
    dist = bfs_distances(e, S)
    return BfsLayers(S, tuple(dist.get(v) for v in range(e.n)))


def is_equidistant(layers: BfsLayers, vertices: Iterable[int]) -> bool:
    ds = {layers[v] for v in vertices}
    return len(ds) == 1 and None not in ds


def tight_numbering(dists: Sequence[Optional[int]]) -> Optional[int]:
    """Offset ``k`` so that rotating the 4-cycle by ``k`` reads ``t, t, t+1, t+1``."""
    if len(dists) != 4 or None in dists:
        return None
    for k in range(4):
        a, b, c, d = (dists[(k + i) % 4] for i in range(4))
        if a == b and c == d == a + 1:
            return k
    return None


@dataclass(frozen=True)
class TightnessReport:
    face: int
    kind: str          # "tight", "equidistant" or "other"
    t: Optional[int]
    distances: tuple[Optional[int], ...]


def classify_face(e: PlanarEmbedding, layers: BfsLayers, face: Union[int, FaceWalk]) -> TightnessReport:
    if isinstance(face, FaceWalk):
        walk, idx = face, e.faces.index(face)
    else:
        walk, idx = e.faces[face], face
    if not walk.is_cycle():
        raise NonCycleFace(f"face {idx} is not bounded by a cycle: {walk.vertices}")
    ds = tuple(layers[v] for v in walk.vertices)
    k = tight_numbering(ds)
    if k is not None:
        return TightnessReport(idx, "tight", ds[k], ds)
    if None not in ds and len(set(ds)) == 1:
        return TightnessReport(idx, "equidistant", ds[0], ds)
    return TightnessReport(idx, "other", None, ds)


# -- identification criterion for 4-cycles -------------------------------------

class DistcritError(ValueError):
    pass


class FamilyTooClose(DistcritError):
    pass


class NotLength4(DistcritError):
    pass


class SourceTooFar(DistcritError):
    pass


class LemmaViolation(AssertionError):
    """A 4-cycle met the identification hypotheses but is not tight."""


@dataclass(frozen=True)
class DistcritVerdict:
    tight: bool
    t: Optional[int]
    triggered: tuple[bool, bool]        # per diagonal (c0,c2), (c1,c3)
    shortcut_pairs: tuple[Optional[tuple[int, int]], Optional[tuple[int, int]]]
    distances: tuple[int, int, int, int]

    @property
    def hypothesis_met(self) -> bool:
        return all(self.triggered)


def _closest_pair(g: Adjacency, family: Sequence[frozenset[int]], limit: int) -> Optional[tuple[int, int]]:
    for a in range(len(family)):
        for b in range(a + 1, len(family)):
            if set_distance(g, family[a], family[b]) <= limit:
                return a, b
    return None


def check_distcrit(
    g: Union[PlanarEmbedding, Adjacency],
    family: Sequence[Iterable[int]],
    cycle: Sequence[int],
    source: int,
    d: int,
) -> DistcritVerdict:
    """Test the diagonal-identification criterion on a 4-cycle.

    ``family`` holds vertex sets pairwise at distance at least ``2d`` and
    ``family[source]`` is within ``d - 1`` of the cycle.  For each diagonal
    the two ends are identified and the family is searched for a pair now
    within ``2d - 1``.  When both diagonals produce such a pair the cycle
    has to be tight with respect to ``family[source]``; anything else
    raises :class:`LemmaViolation`.
    """
    adj = as_adjacency(g)
    if d < 1:
        raise ValueError("d must be at least 1")
    fam = [frozenset(x) for x in family]
    if len(cycle) != 4:
        raise NotLength4(f"cycle has length {len(cycle)}")
    check_cycle(adj, cycle)
    close = _closest_pair(adj, fam, 2 * d - 1)
    if close is not None:
        a, b = close
        raise FamilyTooClose(f"family sets {a} and {b} are within distance {2 * d - 1}")
    S0 = fam[source]
    if set_distance(adj, S0, cycle) > d - 1:
        raise SourceTooFar(f"cycle is farther than {d - 1} from the source set")

    pairs = []
    for u, v in ((cycle[0], cycle[2]), (cycle[1], cycle[3])):
        merged = identify_vertices(adj, u, v)
        renamed = [frozenset(u if x == v else x for x in S) for S in fam]
        pairs.append(_closest_pair(merged, renamed, 2 * d - 1))
    dist = bfs_distances(adj, S0)
    ds = tuple(dist.get(v, math.inf) for v in cycle)
    triggered = (pairs[0] is not None, pairs[1] is not None)
    if not all(triggered):
        return DistcritVerdict(False, None, triggered, tuple(pairs), ds)
    k = tight_numbering(ds)
    if k is None:
        raise LemmaViolation(f"cycle {list(cycle)} meets the hypotheses but has distances {ds}")
    return DistcritVerdict(True, ds[k], triggered, tuple(pairs), ds)


# -- equidistant cycles ------------------------------------------------------

def shortest_cycle(adj: Mapping[int, Iterable[int]], vertices: Optional[Iterable[int]] = None) -> Optional[list[int]]:
    """A shortest cycle of the subgraph induced by ``vertices``.

    Breadth-first search from every root; each non-tree edge closes a walk
    through the root and the shortest simple one wins (ties: smaller root).
    """
    keep = set(adj) if vertices is None else set(vertices)
    nbrs = {v: sorted(u for u in adj[v] if u in keep) for v in keep}
    best: Optional[list[int]] = None
    for root in sorted(keep):
        dist = {root: 0}
        parent: dict[int, Optional[int]] = {root: None}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in nbrs[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
        for x in sorted(dist):
            for y in nbrs[x]:
                if y < x or parent[x] == y or parent[y] == x:
                    continue
                if best is not None and dist[x] + dist[y] + 1 >= len(best):
                    continue
                px, py = [x], [y]
                while parent[px[-1]] is not None:
                    px.append(parent[px[-1]])
                while parent[py[-1]] is not None:
                    py.append(parent[py[-1]])
                cyc = px[::-1] + py[:-1]
                if len(set(cyc)) == len(cyc):
                    best = cyc
    return best


def find_equidistant_cycle(e: PlanarEmbedding, layers: BfsLayers, i0: int) -> Optional[tuple[int, ...]]:
    """Shortest cycle among the vertices at distance exactly ``i0``, or ``None``."""
    cyc = shortest_cycle(as_adjacency(e), layers.layer(i0))
    return None if cyc is None else tuple(cyc)


def shorten_to_induced(adj: Mapping[int, Iterable[int]], cycle: Sequence[int]) -> list[int]:
    """Repeatedly cut along a chord, keeping the shorter side (ties: smaller min id)."""
    cyc = list(cycle)
    while True:
        chords = find_chords(adj, cyc)
        if not chords:
            return cyc
        a, b = chords[0]
        i, j = sorted((cyc.index(a), cyc.index(b)))
        side1 = cyc[i:j + 1]
        side2 = cyc[j:] + cyc[:i + 1]
        cyc = min((side1, side2), key=lambda c: (len(c), min(c)))


# -- growing a cylindrical grid ----------------------------------------------

def lemma_window(s: int) -> float:
    """Width of the distance window that guarantees a grid for cycles of length <= s."""
    return 2 * s + 7 * math.log2(s) + 7


@dataclass(frozen=True)
class FailureWitness:
    reason: str
    face: Optional[int] = None
    distance: Optional[int] = None
    detail: str = ""

    def __str__(self) -> str:
        parts = [f"reason={self.reason}"]
        if self.face is not None:
            parts.append(f"face={self.face}")
        if self.distance is not None:
            parts.append(f"distance={self.distance}")
        if self.detail:
            parts.append(f"detail={self.detail}")
        return " ".join(parts)


class GridGrowthError(RuntimeError):
    def __init__(self, witness: FailureWitness):
        super().__init__(str(witness))
        self.witness = witness


class PreconditionFace(GridGrowthError):
    pass


class WindowExhausted(GridGrowthError):
    pass


class GrowthStuck(GridGrowthError):
    pass


@dataclass(frozen=True)
class Restart:
    old_length: int
    new_length: int
    distance: int
    reason: str       # "chord" or "collision"


@dataclass
class GrownGrid:
    hoops: list[list[int]]
    t: int
    restarts: list[Restart] = field(default_factory=list)

    @property
    def r(self) -> int:
        return len(self.hoops[0])

    @property
    def p(self) -> int:
        return len(self.hoops)

    def as_matrix(self) -> list[list[int]]:
        return [list(h) for h in self.hoops]

    def vertex_map(self) -> dict[int, int]:
        """Map from grid vertex ids of ``CylGrid(r, p)`` to host vertices."""
        g = CylGrid(self.r, self.p)
        return {g.vertex(i + 1, j + 1): v for j, h in enumerate(self.hoops) for i, v in enumerate(h)}


def check_window_faces(e: PlanarEmbedding, layers: BfsLayers, lo: int, hi: int) -> Optional[FailureWitness]:
    """First face at distance in ``[lo, hi]`` that is not bounded by an S-tight cycle."""
    for idx, walk in enumerate(e.faces):
        fd = layers.face_distance(walk)
        if fd is None or not lo <= fd <= hi:
            continue
        if not walk.is_cycle():
            return FailureWitness("face-not-cycle", idx, fd, f"walk {list(walk.vertices)}")
        rep = classify_face(e, layers, idx)
        if rep.kind != "tight":
            return FailureWitness("face-not-tight", idx, fd, f"length {walk.length}, distances {list(rep.distances)}")
    return None


def grow_cylindrical_grid(
    e: PlanarEmbedding,
    layers: BfsLayers,
    C0: Sequence[int],
    window: int,
) -> GrownGrid:
    """Stack hoops outward from an equidistant cycle until an ``r x (r+5)`` grid exists.

    Uses only faces at distance ``i0 .. i0 + window`` from the sources,
    where ``i0`` is the distance of ``C0``; those faces must all be
    S-tight.  A chord on the newest hoop, or two hoop vertices sharing an
    outward neighbour, restarts the growth from a strictly shorter cycle.
    """
    adj = as_adjacency(e)
    check_cycle(adj, C0)
    if not is_equidistant(layers, C0):
        raise ValueError("C0 is not equidistant from the sources")
    i0 = layers[C0[0]]
    if i0 < 1:
        raise ValueError("C0 must avoid the source set")
    hi = i0 + window
    bad = check_window_faces(e, layers, i0, hi)
    if bad is not None:
        raise PreconditionFace(bad)

    restarts: list[Restart] = []
    cyc = shorten_to_induced(adj, C0)
    if len(cyc) < len(C0):
        restarts.append(Restart(len(C0), len(cyc), i0, "chord"))
    t = i0
    hoops = [cyc]
    while len(hoops) < len(hoops[0]) + 5:
        D = hoops[-1]
        dist_D = t + len(hoops) - 1
        if len(hoops) > 1:
            short = shorten_to_induced(adj, D)
            if len(short) < len(D):
                restarts.append(Restart(len(hoops[0]), len(short), dist_D, "chord"))
                hoops, t = [short], dist_D
                continue
        if dist_D > hi:
            raise WindowExhausted(FailureWitness(
                "window-exhausted", None, dist_D, f"{len(hoops)} of {len(hoops[0]) + 5} hoops built"))
        left, _ = cycle_sides(e, D)
        orient = D if not (left & layers.sources) else [D[0]] + D[:0:-1]
        k = len(orient)
        out_of: dict[int, list[int]] = {}
        for idx in range(k):
            a, b = orient[idx], orient[(idx + 1) % k]
            f = e.face_of(a, b)
            walk = e.faces[f].vertices
            pos = walk.index(a)
            quad = [walk[(pos + q) % len(walk)] for q in range(len(walk))]
            if len(quad) != 4 or quad[1] != b or layers[quad[2]] != dist_D + 1 or layers[quad[3]] != dist_D + 1:
                raise GrowthStuck(FailureWitness(
                    "outer-face-not-tight", f, dist_D, f"edge {a}-{b}, walk {quad}"))
            out_of.setdefault(b, []).append(quad[2])
            out_of.setdefault(a, []).append(quad[3])
        image = {}
        for v in orient:
            outs = set(out_of[v])
            if len(outs) != 1:
                raise GrowthStuck(FailureWitness(
                    "fan-at-vertex", None, dist_D, f"vertex {v} has outward neighbours {sorted(outs)}"))
            image[v] = outs.pop()

        collision = _shortest_collision(orient, image)
        if collision is not None:
            new = [image[v] for v in collision[:-1]]
            if len(new) < 3:
                raise GrowthStuck(FailureWitness(
                    "degenerate-collision", None, dist_D + 1, f"path {collision}"))
            new = shorten_to_induced(adj, new)
            restarts.append(Restart(len(hoops[0]), len(new), dist_D + 1, "collision"))
            hoops, t = [new], dist_D + 1
            continue
        nxt = [image[v] for v in D]
        hoops.append(nxt)
    return GrownGrid([list(h) for h in hoops], t, restarts)


def _shortest_collision(cycle: Sequence[int], image: Mapping[int, int]) -> Optional[list[int]]:
    """Shortest subpath of the cycle whose two ends share an image (ties: lower ids)."""
    k = len(cycle)
    best = None
    for i in range(k):
        for length in range(1, k // 2 + 1):
            j = (i + length) % k
            if image[cycle[i]] == image[cycle[j]]:
                path = [cycle[(i + q) % k] for q in range(length + 1)]
                key = (length, min(path[0], path[-1]), max(path[0], path[-1]))
                if best is None or key < best[0]:
                    best = (key, path)
                break
    return None if best is None else best[1]


# -- contamination -----------------------------------------------------------

@dataclass(frozen=True)
class Angle:
    vertex: int
    face: int
    distance: int


def _face_is_cycle_of(walk: FaceWalk, cycle: Optional[Sequence[int]]) -> bool:
    if not cycle or walk.length != len(cycle):
        return False
    return set(walk.vertices) == set(cycle) and walk.is_cycle()


def contaminated_angles(
    e: PlanarEmbedding,
    layers: BfsLayers,
    d: int,
    C0: Optional[Sequence[int]] = None,
) -> list[Angle]:
    """Vertex-face incidences with the vertex within ``d - 1`` of the sources and
    the face of length at least five or bounded by ``C0``."""
    out = set()
    for idx, walk in enumerate(e.faces):
        if walk.length < 5 and not _face_is_cycle_of(walk, C0):
            continue
        for v in walk.vertices:
            dv = layers[v]
            if dv is not None and dv <= d - 1:
                out.add(Angle(v, idx, dv))
    return sorted(out, key=lambda a: (a.distance, a.vertex, a.face))


def contaminated_integers(angles: Iterable[Angle]) -> set[int]:
    return {a.distance for a in angles}


def find_quiet_window(angles: Iterable[Angle], d: int, width: int) -> Optional[int]:
    """Smallest ``i0 >= 2`` with ``i0 + width <= d - 1`` and no contaminated
    integer in ``[i0 - 1, i0 + width]``."""
    bad = contaminated_integers(angles)
    for i0 in range(2, d - width):
        if not any(i in bad for i in range(i0 - 1, i0 + width + 1)):
            return i0
    return None


# -- equidistant length audit --------------------------------------------------

@dataclass(frozen=True)
class LayerCycles:
    layer: int
    vertices: int
    shortest: Optional[int]
    longest: Optional[int]


def longest_cycle_length(adj: Mapping[int, Iterable[int]], vertices: Iterable[int], limit: int = 200_000) -> Optional[int]:
    """Length of a longest cycle in the induced subgraph, by exhaustive DFS.

    Each cycle is explored from its smallest vertex only.  ``limit`` caps
    the number of DFS steps; ``RuntimeError`` when exceeded.
    """
    keep = set(vertices)
    nbrs = {v: sorted(u for u in adj[v] if u in keep) for v in keep}
    best = 0
    steps = 0
    for root in sorted(keep):
        stack = [(root, iter(nbrs[root]))]
        on_path = {root}
        while stack:
            v, it = stack[-1]
            advanced = False
            for u in it:
                if u == root and len(stack) >= 3:
                    best = max(best, len(stack))
                elif u > root and u not in on_path:
                    steps += 1
                    if steps > limit:
                        raise RuntimeError("cycle search exceeded its step limit")
                    on_path.add(u)
                    stack.append((u, iter(nbrs[u])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                on_path.discard(v)
    return best or None


def equidistant_length_audit(e: PlanarEmbedding, layers: BfsLayers, d: Optional[int] = None) -> list[LayerCycles]:
    """Shortest and longest cycle inside each distance layer ``1 .. d - 1``."""
    adj = as_adjacency(e)
    top = layers.depth if d is None else min(d - 1, layers.depth)
    out = []
    for i in range(1, top + 1):
        vs = layers.layer(i)
        short = shortest_cycle(adj, vs)
        out.append(LayerCycles(i, len(vs), None if short is None else len(short), longest_cycle_length(adj, vs)))
    return out
