import itertools
import random

import pytest

from planar3col.coloring import (
    ImproperColoring,
    PartialColoring,
    format_coloring,
    is_even_permutation,
    parse_coloring,
    recolor_permuted,
)
from planar3col.cylinder import make_grid
from planar3col.generate import random_two_connected_map
from planar3col.hosts import cycle_graph, octahedron, path_graph
from planar3col.oracle import enumerate_3colorings, solve_3coloring
from planar3col.winding import (
    NonCycleFace,
    OrientedFacialCycle,
    face_winding_sum,
    face_windings,
    facial_cycle,
    sequence_winding,
    winding_number,
)

PERMS = list(itertools.permutations((1, 2, 3)))


def proper_cycle_colorings(k):
    for seq in itertools.product((1, 2, 3), repeat=k):
        if all(seq[i] != seq[(i + 1) % k] for i in range(k)):
            yield seq


def cyc(colors, tag="f"):
    vs = tuple(range(len(colors)))
    return OrientedFacialCycle(vs, tag), dict(zip(vs, colors))


def direct_winding(colors):
    # independent formula: a third of the sum of +-1 steps
    k = len(colors)
    steps = [1 if (colors[(i + 1) % k] - colors[i]) % 3 == 1 else -1 for i in range(k)]
    assert sum(steps) % 3 == 0
    return sum(steps) // 3


def test_examples():
    assert winding_number(*cyc((1, 2, 1, 2))) == 0
    assert winding_number(*cyc((1, 2, 3))) == 1
    assert winding_number(*cyc((1, 2, 3, 1, 2, 3))) == 2


def test_c4_count_and_zero():
    cols = list(proper_cycle_colorings(4))
    assert len(cols) == 18 == (3 - 1) ** 4 + (3 - 1)
    assert all(winding_number(*cyc(c)) == 0 for c in cols)


def test_errors():
    c, _ = cyc((1, 2, 3))
    with pytest.raises(PartialColoring):
        winding_number(c, {0: 1, 1: 2})
    with pytest.raises(ImproperColoring):
        winding_number(c, {0: 1, 1: 1, 2: 2})
    e = path_graph(3)
    with pytest.raises(NonCycleFace):
        facial_cycle(e, 0)


@pytest.mark.parametrize("k", range(3, 10))
def test_winding_algebra(k):
    for colors in proper_cycle_colorings(k):
        c, phi = cyc(colors)
        w = winding_number(c, phi)
        assert w == direct_winding(colors)
        assert (w - k) % 2 == 0
        assert winding_number(c.reversed("g"), phi) == -w
        for p in PERMS:
            w2 = winding_number(c, recolor_permuted(phi, p))
            assert w2 == (w if is_even_permutation(p) else -w)


def test_two_faces_of_a_cycle_cancel():
    e = cycle_graph(5)
    for colors in proper_cycle_colorings(5):
        phi = dict(enumerate(colors))
        ws = face_windings(e, phi)
        assert len(ws) == 2 and ws[0] == -ws[1]


def test_octahedron_every_coloring():
    e = octahedron()
    rows = enumerate_3colorings(e)
    assert len(rows) == 6   # the octahedron is uniquely 3-colorable up to permutation
    for row in rows:
        assert face_winding_sum(e, dict(enumerate(int(c) for c in row))) == 0


def test_grid_sum_zero():
    rng = random.Random(4)
    e = make_grid(4, 3).embedding
    for _ in range(50):
        phi = solve_3coloring(e, rng=rng)
        assert face_winding_sum(e, phi) == 0


def test_random_maps_sum_zero():
    rng = random.Random(9)
    done = 0
    while done < 60:
        e = random_two_connected_map(rng.randint(3, 16), rng)
        phi = solve_3coloring(e, rng=rng)
        if phi is None:
            continue
        done += 1
        assert face_winding_sum(e, phi) == 0


def test_recolor_examples():
    phi = {0: 1, 1: 2, 2: 3}
    assert recolor_permuted(phi, (1, 2, 3)) == phi
    assert recolor_permuted(phi, {1: 2, 2: 1, 3: 3}) == {0: 2, 1: 1, 2: 3}
    c4 = {0: 1, 1: 2, 2: 1, 3: 2}
    assert recolor_permuted(c4, (2, 3, 1)) == {0: 2, 1: 3, 2: 2, 3: 3}
    with pytest.raises(ValueError):
        recolor_permuted(phi, (1, 1, 2))


def test_coloring_format_roundtrip():
    phi = {3: 2, 0: 1, 7: 3}
    text = format_coloring(phi)
    assert text == "coloring v1\n0 1\n3 2\n7 3\n"
    assert parse_coloring(text) == phi
