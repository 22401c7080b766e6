"""Winding numbers of 3-colorings on oriented facial cycles.

Viewing a coloring as a map onto a triangle, the winding number on a
cycle ``v1 .. vk`` is the number of steps colored ``1 -> 2`` minus the
number colored ``2 -> 1`` (indices taken cyclically).  It equals the sum
of the steps ``+1 / -1`` (mod 3) divided by three.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from .coloring import ImproperColoring, PartialColoring, validate_coloring
from .embedding import PlanarEmbedding


class NonCycleFace(ValueError):
    """A face whose boundary walk repeats a vertex."""


@dataclass(frozen=True)
class OrientedFacialCycle:
    """A cycle listed in the clockwise order of the face named by ``face``.

    The face tag is mandatory: when a graph is itself a cycle both of its
    faces are bounded by it, with opposite orientations.
    """

    vertices: tuple[int, ...]
    face: Hashable

    def reversed(self, face: Hashable) -> "OrientedFacialCycle":
        vs = self.vertices
        return OrientedFacialCycle((vs[0],) + tuple(reversed(vs[1:])), face)


def facial_cycle(e: PlanarEmbedding, face_index: int) -> OrientedFacialCycle:
    walk = e.faces[face_index]
    if not walk.is_cycle():
        raise NonCycleFace(f"face {face_index} is bounded by a closed walk, not a cycle: {walk.vertices}")
    return OrientedFacialCycle(walk.vertices, face_index)


def sequence_winding(colors: Sequence[int]) -> int:
    """Winding number of a cyclic color sequence (no properness check)."""
    k = len(colors)
    w = 0
    for i in range(k):
        a, b = colors[i], colors[(i + 1) % k]
        if a == 1 and b == 2:
            w += 1
        elif a == 2 and b == 1:
            w -= 1
    return w


def winding_number(c: OrientedFacialCycle, phi: Mapping[int, int]) -> int:
    vs = c.vertices
    missing = [v for v in vs if v not in phi]
    if missing:
        raise PartialColoring(f"cycle vertices without a color: {missing}")
    colors = [phi[v] for v in vs]
    k = len(vs)
    for i in range(k):
        if colors[i] == colors[(i + 1) % k]:
            raise ImproperColoring(f"edge {vs[i]}-{vs[(i + 1) % k]} is monochromatic")
        if colors[i] not in (1, 2, 3):
            raise ImproperColoring(f"vertex {vs[i]} has color {colors[i]!r}")
    return sequence_winding(colors)


def face_windings(e: PlanarEmbedding, phi: Mapping[int, int]) -> list[int]:
    validate_coloring(e, phi, total=True)
    return [winding_number(facial_cycle(e, i), phi) for i in range(len(e.faces))]


def face_winding_sum(e: PlanarEmbedding, phi: Mapping[int, int]) -> int:
    """Sum of the windings over all faces; zero whenever it is defined."""
    return sum(face_windings(e, phi))
