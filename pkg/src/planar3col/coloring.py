"""3-colorings as plain ``{vertex: color}`` dicts with colors 1, 2, 3."""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Sequence, Union

from .embedding import Adjacency, PlanarEmbedding, as_adjacency

COLORS = (1, 2, 3)

ThreeColoring = dict[int, int]


class ColoringError(ValueError):
    pass


class ImproperColoring(ColoringError):
    pass


class PartialColoring(ColoringError):
    pass


def add_mod3(color: int, step: int) -> int:
    """Cyclic successor arithmetic on the representatives 1, 2, 3."""
    return (color - 1 + step) % 3 + 1


def monochromatic_edges(g: Union[PlanarEmbedding, Adjacency], phi: Mapping[int, int]) -> list[tuple[int, int]]:
    adj = as_adjacency(g)
    bad = []
    for u, ns in adj.items():
        cu = phi.get(u)
        if cu is None:
            continue
        for v in ns:
            if u < v and phi.get(v) == cu:
                bad.append((u, v))
    return bad


def validate_coloring(
    g: Union[PlanarEmbedding, Adjacency],
    phi: Mapping[int, int],
    total: bool = True,
) -> None:
    """The one properness check every coloring in the package goes through."""
    adj = as_adjacency(g)
    for v, c in phi.items():
        if c not in COLORS:
            raise ColoringError(f"vertex {v} has color {c!r}, expected 1, 2 or 3")
        if v not in adj:
            raise ColoringError(f"vertex {v} is not in the graph")
    if total:
        missing = [v for v in adj if v not in phi]
        if missing:
            raise PartialColoring(f"uncolored vertices: {missing[:10]}")
    bad = monochromatic_edges(adj, phi)
    if bad:
        raise ImproperColoring(f"monochromatic edges: {bad[:10]}")


def is_proper(g: Union[PlanarEmbedding, Adjacency], phi: Mapping[int, int], total: bool = True) -> bool:
    try:
        validate_coloring(g, phi, total=total)
    except ColoringError:
        return False
    return True


def recolor_permuted(phi: Mapping[int, int], permutation: Union[Mapping[int, int], Sequence[int]]) -> ThreeColoring:
    """Compose ``phi`` with a permutation of the colors.

    ``permutation`` is either a dict or the sequence of images of 1, 2, 3.
    """
    if not isinstance(permutation, Mapping):
        permutation = dict(zip(COLORS, permutation))
    if sorted(permutation) != list(COLORS) or sorted(permutation.values()) != list(COLORS):
        raise ValueError(f"not a permutation of the colors: {permutation}")
    return {v: permutation[c] for v, c in phi.items()}


def is_even_permutation(permutation: Union[Mapping[int, int], Sequence[int]]) -> bool:
    if isinstance(permutation, Mapping):
        permutation = [permutation[c] for c in COLORS]
    return tuple(permutation) in ((1, 2, 3), (2, 3, 1), (3, 1, 2))


def parse_colors(text: str) -> list[int]:
    """``"1,2,3"`` -> ``[1, 2, 3]``."""
    try:
        colors = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise ColoringError(f"bad color list {text!r}") from exc
    for c in colors:
        if c not in COLORS:
            raise ColoringError(f"bad color {c} in {text!r}")
    return colors


# -- text format -------------------------------------------------------------

COLORING_HEADER = "coloring v1"


def format_coloring(phi: Mapping[int, int]) -> str:
    lines = [COLORING_HEADER] + [f"{v} {phi[v]}" for v in sorted(phi)]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> ThreeColoring:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if lines and lines[0] == COLORING_HEADER:
        lines = lines[1:]
    phi: ThreeColoring = {}
    for ln in lines:
        parts = ln.split()
        if len(parts) != 2:
            raise ColoringError(f"malformed coloring line {ln!r}")
        v, c = int(parts[0]), int(parts[1])
        if c not in COLORS:
            raise ColoringError(f"bad color in line {ln!r}")
        if v in phi:
            raise ColoringError(f"vertex {v} colored twice")
        phi[v] = c
    return phi


def read_coloring(path) -> ThreeColoring:
    with open(path) as fh:
        return parse_coloring(fh.read())


def write_coloring(phi: Mapping[int, int], path) -> None:
    with open(path, "w") as fh:
        fh.write(format_coloring(phi))


def restrict(phi: Mapping[int, int], vertices: Iterable[int]) -> ThreeColoring:
    return {v: phi[v] for v in vertices if v in phi}


def first_missing_color(used: Iterable[int]) -> Optional[int]:
    used = set(used)
    for c in COLORS:
        if c not in used:
            return c
    return None
