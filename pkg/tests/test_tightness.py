import math
import random

import networkx as nx
import pytest

from planar3col.cylinder import make_grid
from planar3col.embedding import build_embedding
from planar3col.generate import random_map, random_two_connected_map
from planar3col.hosts import cycle_graph, distcrit_instance, figure_eight_host, path_graph, perturbed_grid
from planar3col.tightness import (
    Angle,
    FamilyTooClose,
    GridGrowthError,
    LemmaViolation,
    NotLength4,
    PreconditionFace,
    SourceTooFar,
    WindowExhausted,
    bfs_layers,
    check_distcrit,
    classify_face,
    contaminated_angles,
    contaminated_integers,
    equidistant_length_audit,
    find_equidistant_cycle,
    find_quiet_window,
    grow_cylindrical_grid,
    is_equidistant,
    lemma_window,
    longest_cycle_length,
    shortest_cycle,
    shorten_to_induced,
    tight_numbering,
)
from planar3col.winding import NonCycleFace


def to_nx(adj):
    return nx.Graph([(u, v) for u, ns in adj.items() for v in ns])


# -- classification -------------------------------------------------------------

def test_tight_numbering():
    assert tight_numbering((2, 2, 3, 3)) == 0
    assert tight_numbering((3, 2, 2, 3)) == 1
    assert tight_numbering((1, 2, 1, 2)) is None
    assert tight_numbering((1, 1, 1, 1)) is None
    assert tight_numbering((1, 1, 2)) is None


def test_grid_quads_are_tight():
    g = make_grid(5, 3)
    L = bfs_layers(g.embedding, g.hoop(1))
    kinds = {}
    for idx, walk in enumerate(g.embedding.faces):
        rep = classify_face(g.embedding, L, idx)
        kinds.setdefault(rep.kind, []).append(rep.t)
        if walk.length == 4:
            assert rep.kind == "tight"
    assert sorted(kinds["tight"]) == [0] * 5 + [1] * 5
    # the caps are equidistant cycles at distances 0 and 2
    assert sorted(kinds["equidistant"]) == [0, 2]


def test_other_faces():
    e = build_embedding([[1, 3], [0, 2], [1, 3], [2, 0]])   # a 4-cycle
    L = bfs_layers(e, [0])
    assert classify_face(e, L, 0).kind == "other"
    with pytest.raises(NonCycleFace):
        p = path_graph(3)
        classify_face(p, bfs_layers(p, [0]), 0)


def test_unreachable_distance_is_none():
    e = build_embedding([[1, 2], [0, 2], [0, 1], [4, 5], [3, 5], [3, 4]])
    L = bfs_layers(e, [0])
    assert L[3] is None


# -- identification criterion ----------------------------------------------------

@pytest.mark.parametrize("d", range(1, 5))
def test_distcrit_instances_tight(d):
    for t in range(d):
        adj, fam, C = distcrit_instance(d, t)
        v = check_distcrit(adj, fam, C, 0, d)
        assert v.hypothesis_met and v.tight and v.t == t
        g = to_nx(adj)
        ds = [min(nx.shortest_path_length(g, s, c) for s in fam[0]) for c in C]
        assert tuple(ds) == v.distances


def test_distcrit_errors():
    adj, fam, C = distcrit_instance(2, 0)
    with pytest.raises(NotLength4):
        check_distcrit(adj, fam, C[:3], 0, 2)
    with pytest.raises(FamilyTooClose):
        check_distcrit(adj, fam, C, 0, 10)
    with pytest.raises(ValueError):
        check_distcrit(adj, fam, C, 0, 0)
    g = make_grid(4, 8)
    with pytest.raises(SourceTooFar):
        check_distcrit(g.embedding, [g.hoop(1), g.hoop(8)], [g.vertex(1, 5), g.vertex(2, 5), g.vertex(2, 6), g.vertex(1, 6)], 0, 2)


def test_distcrit_not_triggered_on_plain_grid():
    g = make_grid(4, 12)
    quad = [g.vertex(1, 2), g.vertex(2, 2), g.vertex(2, 3), g.vertex(1, 3)]
    v = check_distcrit(g.embedding, [g.hoop(1), g.hoop(12)], quad, 0, 3)
    assert not v.tight and not v.hypothesis_met


def test_lemma_violation_is_an_assertion():
    assert issubclass(LemmaViolation, AssertionError)


# -- equidistant cycles ------------------------------------------------------------

def test_grid_hoop_is_found():
    g = make_grid(6, 8)
    L = bfs_layers(g.embedding, g.hoop(1))
    for i in range(1, 8):
        C = find_equidistant_cycle(g.embedding, L, i)
        assert sorted(C) == sorted(g.hoop(i + 1)) and is_equidistant(L, C)


def test_tree_layer_has_no_cycle():
    e = path_graph(6)
    L = bfs_layers(e, [0])
    assert all(find_equidistant_cycle(e, L, i) is None for i in range(1, 6))


def test_shortest_cycle_against_networkx():
    rng = random.Random(7)
    for _ in range(40):
        e = random_map(rng.randint(4, 16), rng)
        adj = {v: list(e.rotations[v]) for v in range(e.n)}
        cyc = shortest_cycle(adj)
        g = to_nx(adj)
        g.add_nodes_from(range(e.n))
        try:
            girth = min(len(c) for c in nx.minimum_cycle_basis(g))
        except ValueError:
            girth = None
        if girth is None:
            assert cyc is None
        else:
            assert len(cyc) == girth
            assert all(e.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def test_shorten_to_induced():
    e = build_embedding([[1, 2, 3], [0, 2], [1, 3, 0], [2, 0]])
    adj = {v: list(e.rotations[v]) for v in range(e.n)}
    short = shorten_to_induced(adj, [0, 1, 2, 3])
    assert len(short) == 3
    assert shorten_to_induced(adj, [0, 1, 2]) == [0, 1, 2]


# -- growing the grid ---------------------------------------------------------------

@pytest.mark.parametrize("r", [4, 5, 6])
def test_growth_on_grid_host(r):
    g = make_grid(r, r + 20)
    L = bfs_layers(g.embedding, g.hoop(1))
    C0 = find_equidistant_cycle(g.embedding, L, 3)
    grown = grow_cylindrical_grid(g.embedding, L, list(C0), window=r + 6)
    assert (grown.r, grown.p) == (r, r + 5) and not grown.restarts
    dists = [L[h[0]] for h in grown.hoops]
    assert dists == list(range(3, 3 + r + 5))
    # every grid edge is a host edge
    vm = grown.vertex_map()
    grid = make_grid(grown.r, grown.p)
    for a, b in grid.embedding.edges:
        assert g.embedding.has_edge(vm[a], vm[b])


def test_figure_eight_restart():
    e, S = figure_eight_host()
    L = bfs_layers(e, S)
    grown = grow_cylindrical_grid(e, L, list(find_equidistant_cycle(e, L, 2)), window=11)
    assert grown.restarts
    lengths = [len(find_equidistant_cycle(e, L, 2))] + [x.new_length for x in grown.restarts]
    assert all(a > b for a, b in zip(lengths, lengths[1:]))
    assert grown.p == grown.r + 5


@pytest.mark.parametrize("kind", ["subdivide", "diagonal"])
def test_bad_face_reported(kind):
    host = perturbed_grid(5, 25, kind, 6)
    L = bfs_layers(host, make_grid(5, 25).hoop(1))
    with pytest.raises(PreconditionFace) as info:
        grow_cylindrical_grid(host, L, make_grid(5, 25).hoop(4), window=11)
    assert info.value.witness.face is not None
    assert "reason=face-not-tight" in str(info.value)


def test_short_window():
    g = make_grid(5, 25)
    L = bfs_layers(g.embedding, g.hoop(1))
    with pytest.raises(WindowExhausted) as info:
        grow_cylindrical_grid(g.embedding, L, g.hoop(4), window=5)
    assert "of 10 hoops built" in str(info.value)
    assert isinstance(info.value, GridGrowthError)


def test_growth_rejects_bad_start():
    g = make_grid(5, 10)
    L = bfs_layers(g.embedding, g.hoop(1))
    with pytest.raises(ValueError):
        grow_cylindrical_grid(g.embedding, L, g.hoop(1), window=20)


def test_lemma_window():
    assert lemma_window(4) == pytest.approx(8 + 14 + 7)
    assert lemma_window(8) == pytest.approx(16 + 7 * 3 + 7)
    assert math.isclose(lemma_window(2), 4 + 7 + 7)


# -- contamination --------------------------------------------------------------------

def test_contamination_on_grid():
    g = make_grid(5, 10)
    L = bfs_layers(g.embedding, g.hoop(1))
    angles = contaminated_angles(g.embedding, L, 6)
    # only the inner cap is long enough and it sits at distance 0
    assert contaminated_integers(angles) == {0}
    assert len(angles) == 5
    assert find_quiet_window(angles, 12, 3) == 2


def test_contamination_from_c0():
    g = make_grid(4, 10)
    L = bfs_layers(g.embedding, g.hoop(1))
    quad = next(w for w in g.embedding.faces if w.length == 4 and L.face_distance(w) == 2)
    angles = contaminated_angles(g.embedding, L, 5, list(quad.vertices))
    assert 2 in contaminated_integers(angles) and 3 in contaminated_integers(angles)


def test_quiet_window_examples():
    angles = [Angle(0, 0, 3), Angle(1, 0, 9)]
    assert find_quiet_window(angles, 20, 3) == 5
    assert find_quiet_window(angles, 9, 3) == 5
    assert find_quiet_window(angles, 8, 3) is None
    assert find_quiet_window([], 6, 3) == 2
    assert find_quiet_window([], 5, 3) is None


# -- length audit ----------------------------------------------------------------------

def test_audit_on_grid():
    g = make_grid(5, 6)
    L = bfs_layers(g.embedding, g.hoop(1))
    rows = equidistant_length_audit(g.embedding, L)
    assert [(x.layer, x.shortest, x.longest) for x in rows] == [(i, 5, 5) for i in range(1, 6)]


def test_longest_cycle_against_networkx():
    rng = random.Random(3)
    for _ in range(25):
        e = random_two_connected_map(rng.randint(4, 11), rng)
        adj = {v: list(e.rotations[v]) for v in range(e.n)}
        g = nx.DiGraph(to_nx(adj).to_directed())
        lengths = [len(c) for c in nx.simple_cycles(g) if len(c) >= 3]
        assert longest_cycle_length(adj, range(e.n)) == max(lengths)


def test_longest_cycle_limit():
    g = make_grid(6, 6).embedding
    adj = {v: list(g.rotations[v]) for v in range(g.n)}
    with pytest.raises(RuntimeError):
        longest_cycle_length(adj, range(g.n), limit=10)
    assert longest_cycle_length({v: list(cycle_graph(7).rotations[v]) for v in range(7)}, range(7)) == 7
