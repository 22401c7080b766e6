"""Cylindrical grids and the hoop-by-hoop coloring extension.

The ``r x s`` grid has vertex ``(i, j)`` (``1 <= i <= r``, ``1 <= j <= s``)
at id ``(j - 1) * r + (i - 1)``.  It is drawn with hoop ``D_1`` innermost
and ``D_s`` outermost, index ``i`` increasing counterclockwise.  With the
package's face convention the cap face inside ``D_1`` is traced in
increasing ``i`` and the cap face outside ``D_s`` in decreasing ``i``;
cuff windings are always measured on those cap faces.  Every other face
is a quadrilateral, so for any proper coloring of the whole grid the two
cap windings cancel.

Hoop colorings inside the algorithms are plain lists indexed by position
``i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Optional, Sequence, Union

from .coloring import ImproperColoring, ThreeColoring, add_mod3, validate_coloring
from .embedding import PlanarEmbedding
from .winding import OrientedFacialCycle, sequence_winding


class GridError(ValueError):
    pass


class BadDimensions(GridError):
    pass


class WindingTooLarge(GridError):
    pass


class WindingMismatch(GridError):
    pass


class SegmentationError(GridError):
    pass


class NoMergeAvailable(RuntimeError):
    """No two segments two apart share a flag although one was required."""


class ParityViolation(RuntimeError):
    pass


class WindingBookkeepingError(RuntimeError):
    pass


class ExtensionFailed(RuntimeError):
    pass


def lemma_height(r: int) -> int:
    """Number of hoops needed to two-color the far cuff: ceil((r + 3) / 2)."""
    return (r + 4) // 2


@dataclass(frozen=True)
class CylGrid:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 3 or self.s < 1:
            raise BadDimensions(f"need r >= 3 and s >= 1, got r={self.r}, s={self.s}")

    def vertex(self, i: int, j: int) -> int:
        """Id of the ``i``-th vertex of hoop ``j`` (both 1-based, ``i`` taken mod r)."""
        if not 1 <= j <= self.s:
            raise IndexError(f"hoop {j} out of range 1..{self.s}")
        return (j - 1) * self.r + (i - 1) % self.r

    def position(self, v: int) -> tuple[int, int]:
        j, i = divmod(v, self.r)
        return i + 1, j + 1

    def hoop(self, j: int) -> list[int]:
        return [self.vertex(i, j) for i in range(1, self.r + 1)]

    @property
    def hoops(self) -> list[list[int]]:
        return [self.hoop(j) for j in range(1, self.s + 1)]

    def up(self, v: int) -> int:
        """The neighbour of ``v`` in the next hoop."""
        i, j = self.position(v)
        return self.vertex(i, j + 1)

    @property
    def n(self) -> int:
        return self.r * self.s

    @cached_property
    def embedding(self) -> PlanarEmbedding:
        r, s = self.r, self.s
        rots = []
        for j in range(1, s + 1):
            for i in range(1, r + 1):
                rot = []
                if j < s:
                    rot.append(self.vertex(i, j + 1))
                rot.append(self.vertex(i - 1, j))
                if j > 1:
                    rot.append(self.vertex(i, j - 1))
                rot.append(self.vertex(i + 1, j))
                rots.append(rot)
        return PlanarEmbedding(rots)

    def inner_cap(self) -> OrientedFacialCycle:
        """``D_1`` oriented as the cap face it bounds."""
        return OrientedFacialCycle(tuple(self.hoop(1)), "inner-cap")

    def outer_cap(self) -> OrientedFacialCycle:
        """``D_s`` oriented as the cap face it bounds."""
        h = self.hoop(self.s)
        return OrientedFacialCycle((h[0],) + tuple(reversed(h[1:])), "outer-cap")

    def cuff_cycles(self) -> tuple[OrientedFacialCycle, OrientedFacialCycle]:
        return self.inner_cap(), self.outer_cap()


def make_grid(r: int, s: int) -> CylGrid:
    return CylGrid(r, s)


# -- segments ----------------------------------------------------------------

@dataclass(frozen=True)
class Segment:
    """Odd run of hoop positions colored ``flag, flag+1, flag, ..., flag``."""

    start: int
    size: int
    flag: int

    def positions(self, r: int) -> list[int]:
        return [(self.start + t) % r for t in range(self.size)]


def check_segment(colors: Sequence[int], seg: Segment) -> None:
    r = len(colors)
    if seg.size % 2 == 0 or not 1 <= seg.size < r:
        raise SegmentationError(f"segment {seg} must have odd size below {r}")
    other = add_mod3(seg.flag, 1)
    for t, p in enumerate(seg.positions(r)):
        want = seg.flag if t % 2 == 0 else other
        if colors[p] != want:
            raise SegmentationError(f"segment {seg}: position {p} has color {colors[p]}, expected {want}")


@dataclass(frozen=True)
class Segmentation:
    """Segments covering a hoop of length ``r`` in cyclic order."""

    segments: tuple[Segment, ...]
    r: int

    @property
    def k(self) -> int:
        return len(self.segments)

    @property
    def flags(self) -> list[int]:
        return [x.flag for x in self.segments]

    def __iter__(self):
        return iter(self.segments)

    def __getitem__(self, i: int) -> Segment:
        return self.segments[i]

    def is_progressive(self, p: int) -> bool:
        return self.k <= self.r - 2 * p + 2

    def validate(self, colors: Sequence[int]) -> None:
        if len(colors) != self.r:
            raise SegmentationError(f"hoop has {len(colors)} vertices, segmentation expects {self.r}")
        if sum(x.size for x in self.segments) != self.r:
            raise SegmentationError("segments do not cover the hoop exactly")
        for a, b in zip(self.segments, self.segments[1:] + self.segments[:1]):
            if (a.start + a.size) % self.r != b.start:
                raise SegmentationError(f"segments {a} and {b} are not consecutive")
        for x in self.segments:
            check_segment(colors, x)

    def block_of(self, pos: int) -> int:
        for idx, x in enumerate(self.segments):
            if (pos - x.start) % self.r < x.size:
                return idx
        raise SegmentationError(f"position {pos} is not covered")


def _check_hoop(colors: Sequence[int]) -> None:
    r = len(colors)
    for p in range(r):
        if colors[p] not in (1, 2, 3):
            raise ImproperColoring(f"position {p} has color {colors[p]!r}")
        if colors[p] == colors[(p + 1) % r]:
            raise ImproperColoring(f"positions {p} and {(p + 1) % r} share color {colors[p]}")


def singleton_segmentation(colors: Sequence[int]) -> Segmentation:
    _check_hoop(colors)
    return Segmentation(tuple(Segment(p, 1, c) for p, c in enumerate(colors)), len(colors))


def segmentation_of(colors: Sequence[int]) -> Segmentation:
    """Greedy segmentation scanning from position 0, each block as long as possible."""
    _check_hoop(colors)
    r = len(colors)
    segs = []
    pos = 0
    while pos < r:
        flag = colors[pos]
        other = add_mod3(flag, 1)
        run = 1
        while pos + run < r and colors[pos + run] == (other if run % 2 else flag):
            run += 1
        size = run if run % 2 else run - 1
        segs.append(Segment(pos, size, flag))
        pos += size
    out = Segmentation(tuple(segs), r)
    out.validate(colors)
    return out


def _merge_triple(seg: Segmentation) -> Optional[int]:
    k = seg.k
    if k < 4:
        return None
    flags = seg.flags
    for i in range(k):
        if flags[i] == flags[(i + 2) % k]:
            return i
    return None


def _shift_with_middle(colors: Sequence[int], middle: set[int], outer_flag: int, middle_flag: int) -> list[int]:
    """Next-hoop colors when the block ``middle`` sits between two flag-``outer_flag`` blocks.

    Every color moves one step toward the middle block's flag direction,
    except the middle block's third color, which is pinned so the three
    blocks fuse into one segment.
    """
    step = 1 if middle_flag == add_mod3(outer_flag, 1) else -1
    third = add_mod3(outer_flag, 2)
    pinned = add_mod3(outer_flag, 1) if step == 1 else outer_flag
    return [pinned if (p in middle and c == third) else add_mod3(c, step) for p, c in enumerate(colors)]


def push_hoop(
    colors: Sequence[int],
    seg: Segmentation,
    w_target: Optional[int] = None,
    require_merge: bool = False,
) -> tuple[list[int], Segmentation]:
    """Color the next hoop from a segmented one.

    Merges the first three consecutive blocks whose outer flags agree when
    there are at least four blocks; otherwise shifts every color by +1.
    ``w_target``, when given, is the winding the new hoop must carry in
    increasing-position order.
    """
    seg.validate(colors)
    r, k = seg.r, seg.k
    if (k - r) % 2:
        raise ParityViolation(f"{k} blocks on a hoop of length {r}")
    i = _merge_triple(seg)
    if i is None:
        if require_merge:
            raise NoMergeAvailable(f"no mergeable triple among flags {seg.flags}")
        new_colors = [add_mod3(c, 1) for c in colors]
        new_seg = Segmentation(tuple(Segment(x.start, x.size, add_mod3(x.flag, 1)) for x in seg), r)
    else:
        x1, x2, x3 = seg[i], seg[(i + 1) % k], seg[(i + 2) % k]
        new_colors = _shift_with_middle(colors, set(x2.positions(r)), x1.flag, x2.flag)
        step = 1 if x2.flag == add_mod3(x1.flag, 1) else -1
        merged = Segment(x1.start, x1.size + x2.size + x3.size, add_mod3(x1.flag, step))
        rest = [seg[(i + 3 + t) % k] for t in range(k - 3)]
        new_seg = Segmentation(
            (merged,) + tuple(Segment(x.start, x.size, add_mod3(x.flag, step)) for x in rest), r
        )
    new_seg.validate(new_colors)
    if w_target is not None and sequence_winding(new_colors) != w_target:
        raise WindingBookkeepingError(
            f"new hoop winds {sequence_winding(new_colors)}, expected {w_target}"
        )
    return new_colors, new_seg


# -- extension lemmas --------------------------------------------------------

@dataclass(frozen=True)
class HoopRecord:
    hoop: int
    blocks: Optional[int]
    flags: Optional[tuple[int, ...]]
    winding: int
    colors: tuple[int, ...]

    def __str__(self) -> str:
        blocks = "-" if self.blocks is None else str(self.blocks)
        flags = "-" if self.flags is None else ",".join(map(str, self.flags))
        colors = ",".join(map(str, self.colors))
        return f"hoop={self.hoop} blocks={blocks} flags={flags} winding={self.winding} colors={colors}"


def _final_rows_odd(colors: Sequence[int], seg: Segmentation, v1: int) -> tuple[list[int], list[int]]:
    r = len(colors)
    if seg.k != 3:
        raise ExtensionFailed(f"expected 3 blocks before the last two hoops, got {seg.k}")
    j3 = seg.block_of(v1)
    shift = (3 - seg[j3].flag) % 3
    flags = [add_mod3(f, shift) for f in seg.flags]
    x3 = seg[j3]
    prev = (j3 - 1) % 3
    x1 = seg[flags.index(1)]

    offset = (v1 - x3.start) % r
    pos3 = x3.positions(r)
    before, after = pos3[:offset], pos3[offset + 1:]
    if flags[prev] == 2:
        x3a, x3b = before, after   # x3a touches the flag-2 block, x3b the flag-1 block
    else:
        x3a, x3b = after, before
    x3b = set(x3b)

    def path_index(p: int) -> int:
        return (p - v1 - 1) % r

    parity_a = path_index(x1.start) % 2
    in_a = {p for p in range(r) if p != v1 and path_index(p) % 2 == parity_a}
    a, b = (1, 3) if len(x3a) % 2 == 0 else (3, 1)

    row1, row2 = [0] * r, [0] * r
    for p in range(r):
        if p == v1:
            row1[p], row2[p] = a, b
        elif p in in_a:
            row1[p], row2[p] = 2, a
        else:
            row1[p], row2[p] = (1 if p in x3b else 3), 2
    back = (3 - shift) % 3
    return [add_mod3(c, back) for c in row1], [add_mod3(c, back) for c in row2]


def _final_rows_even(colors: Sequence[int], seg: Segmentation, last_step: int = 1) -> tuple[list[int], list[int]]:
    if seg.k != 2:
        raise ExtensionFailed(f"expected 2 blocks before the last two hoops, got {seg.k}")
    x1, x2 = seg[0], seg[1]
    # fusing both blocks leaves a two-colored hoop; the last one is any shift of it
    row1 = _shift_with_middle(colors, set(x2.positions(seg.r)), x1.flag, x2.flag)
    row2 = [add_mod3(c, last_step) for c in row1]
    return row1, row2


def extend_cuff_colors(
    cuff: Sequence[int],
    v0: int,
    trace: Optional[list] = None,
    last_step: int = 1,
) -> list[list[int]]:
    """Colors of all ``ceil((r+3)/2)`` hoops, starting from the cuff coloring.

    ``v0`` is a position on the last hoop; every other vertex of that hoop
    ends up with one of two colors.  For even ``r`` the last hoop is fully
    two-colored and ``last_step`` (+1 or -1) picks which of its two valid
    color shifts is used.
    """
    cuff = list(cuff)
    _check_hoop(cuff)
    r = len(cuff)
    if r < 3:
        raise BadDimensions(f"hoop length {r} < 3")
    if not 0 <= v0 < r:
        raise IndexError(f"position {v0} not on a hoop of length {r}")
    w = sequence_winding(cuff)
    if abs(w) > 1:
        raise WindingTooLarge(f"cuff winding {w} exceeds 1 in absolute value")
    s = lemma_height(r)

    hoops = [cuff]
    seg = singleton_segmentation(cuff)
    if trace is not None:
        trace.append(HoopRecord(1, seg.k, tuple(seg.flags), w, tuple(cuff)))
    for p in range(1, s - 2):
        require = seg.k == r - 2 * p + 2
        new, seg = push_hoop(hoops[-1], seg, w_target=w, require_merge=require)
        if not seg.is_progressive(p + 1):
            raise ExtensionFailed(f"hoop {p + 1} has {seg.k} blocks, more than {r - 2 * p}")
        hoops.append(new)
        if trace is not None:
            trace.append(HoopRecord(p + 1, seg.k, tuple(seg.flags), sequence_winding(new), tuple(new)))

    if r % 2:
        row1, row2 = _final_rows_odd(hoops[-1], seg, v0)
    else:
        row1, row2 = _final_rows_even(hoops[-1], seg, last_step)
    hoops += [row1, row2]
    if trace is not None:
        for idx in (s - 1, s):
            trace.append(HoopRecord(idx, None, None, sequence_winding(hoops[idx - 1]), tuple(hoops[idx - 1])))
    return hoops


def _cuff_colors(g: CylGrid, phi: Union[Mapping[int, int], Sequence[int]], j: int) -> list[int]:
    if isinstance(phi, Mapping):
        try:
            return [phi[v] for v in g.hoop(j)]
        except KeyError as exc:
            raise GridError(f"hoop {j} vertex {exc.args[0]} is uncolored") from None
    colors = list(phi)
    if len(colors) != g.r:
        raise GridError(f"expected {g.r} cuff colors, got {len(colors)}")
    return colors


def _assemble(g: CylGrid, hoops: Sequence[Sequence[int]]) -> ThreeColoring:
    psi = {}
    for j, colors in enumerate(hoops, start=1):
        for v, c in zip(g.hoop(j), colors):
            psi[v] = c
    validate_coloring(g.embedding, psi)
    return psi


def extend_one_cuff(
    g: CylGrid,
    phi: Union[Mapping[int, int], Sequence[int]],
    v0: int,
    trace: Optional[list] = None,
) -> ThreeColoring:
    """Extend a coloring of ``D_1`` to the grid, two-coloring ``D_s`` minus ``v0``.

    ``phi`` is a dict on the cuff vertices or the list of their colors in
    hoop order; ``v0`` is a vertex id on the last hoop.
    """
    if g.s != lemma_height(g.r):
        raise BadDimensions(f"grid height must be {lemma_height(g.r)} for r={g.r}, got {g.s}")
    cuff = _cuff_colors(g, phi, 1)
    i0, j0 = g.position(v0)
    if j0 != g.s:
        raise GridError(f"vertex {v0} is not on the last hoop")
    return _assemble(g, extend_cuff_colors(cuff, i0 - 1, trace))


def fill_band(lower: Sequence[int], upper: Sequence[int], m: int = 1) -> Optional[list[list[int]]]:
    """Color ``m`` hoops sandwiched between two colored hoops, or ``None``.

    Dynamic program over the columns; a state is the column's ``m`` colors
    and the first column is fixed before walking around.  Linear in the
    hoop length.
    """
    r = len(lower)
    if m < 1:
        raise ValueError("band needs at least one hoop")
    columns = []
    for p in range(r):
        states = [()]
        for level in range(m):
            below = lambda st: lower[p] if not st else st[-1]  # noqa: E731
            states = [st + (c,) for st in states for c in (1, 2, 3) if c != below(st)]
        columns.append([st for st in states if st[-1] != upper[p]])

    def compatible(x: tuple, y: tuple) -> bool:
        return all(a != b for a, b in zip(x, y))

    for first in columns[0]:
        back: list[dict[tuple, tuple]] = [{first: ()}]
        for p in range(1, r):
            layer = {}
            for st in columns[p]:
                for prev in back[-1]:
                    if compatible(prev, st):
                        layer[st] = prev
                        break
            back.append(layer)
        for last in back[-1]:
            if compatible(last, first):
                out = [None] * r
                st = last
                for p in range(r - 1, -1, -1):
                    out[p] = st
                    st = back[p][st]
                return [[out[p][level] for p in range(r)] for level in range(m)]
    return None


def fill_between(lower: Sequence[int], upper: Sequence[int]) -> Optional[list[int]]:
    """Color one hoop between two colored hoops, or ``None``."""
    band = fill_band(lower, upper, 1)
    return None if band is None else band[0]


def extend_two_cuffs(
    g: CylGrid,
    phi: Mapping[int, int],
    trace: Optional[list] = None,
) -> ThreeColoring:
    """Extend a coloring of both cuffs of the ``r x (r+5)`` grid.

    Needs ``|w(C1)| <= 1`` and ``w(C1) + w(C2) = 0`` with both windings
    taken on the cap faces.
    """
    r = g.r
    if g.s != r + 5:
        raise BadDimensions(f"grid height must be {r + 5} for r={r}, got {g.s}")
    c1 = _cuff_colors(g, phi, 1)
    c2 = _cuff_colors(g, phi, g.s)
    _check_hoop(c1)
    _check_hoop(c2)
    w1 = sequence_winding(c1)
    w2 = -sequence_winding(c2)
    if abs(w1) > 1:
        raise WindingTooLarge(f"|w(C1)| = {abs(w1)} > 1")
    if w1 + w2 != 0:
        raise WindingMismatch(f"w(C1) + w(C2) = {w1} + {w2} != 0")

    h = lemma_height(r)
    m = g.s - 2 * h
    top_trace: list = []
    top = extend_cuff_colors(c2, 0, top_trace)
    # even r: the two halves may end in anti-phase; the other final shift avoids it
    for step in ((1, -1) if r % 2 == 0 else (1,)):
        bottom_trace: list = []
        bottom = extend_cuff_colors(c1, 0, bottom_trace, last_step=step)
        band = fill_band(bottom[-1], top[-1], m)
        if band is not None:
            break
    else:
        raise ExtensionFailed(f"hoops {h + 1}..{h + m} cannot be colored between hoops {h} and {h + m + 1}")

    hoops = bottom + band + top[::-1]
    if trace is not None:
        trace.extend(bottom_trace)
        for j in range(h + 1, h + m + 1):
            trace.append(HoopRecord(j, None, None, sequence_winding(hoops[j - 1]), tuple(hoops[j - 1])))
        for rec in reversed(top_trace):
            trace.append(HoopRecord(g.s + 1 - rec.hoop, rec.blocks, rec.flags, rec.winding, rec.colors))
    return _assemble(g, hoops)


def cuff_windings(g: CylGrid, phi: Mapping[int, int]) -> tuple[int, int]:
    """Cap-face windings of the two cuffs."""
    c1 = _cuff_colors(g, phi, 1)
    c2 = _cuff_colors(g, phi, g.s)
    return sequence_winding(c1), -sequence_winding(c2)


