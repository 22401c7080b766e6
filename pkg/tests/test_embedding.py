import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from planar3col.cylinder import make_grid
from planar3col.embedding import (
    INF,
    AdjacentPair,
    AsymmetricAdjacency,
    DisconnectedEmbedding,
    DuplicateNeighbor,
    EmptySet,
    NotACycle,
    SelfLoop,
    add_edge_in_face,
    add_vertex_in_face,
    build_embedding,
    cycle_sides,
    embedding_from_faces,
    euler_characteristic,
    find_triangles,
    format_embedding,
    identify_vertices,
    is_induced_cycle,
    is_separating_cycle,
    min_triangle_pair_distance,
    parse_embedding,
    set_distance,
    subdivide_edge,
    trace_faces,
)
from planar3col.generate import random_map, random_two_connected_map
from planar3col.hosts import complete4, cycle_graph, icosahedron, octahedron, path_graph


def to_nx(e):
    g = nx.Graph()
    g.add_nodes_from(range(e.n))
    g.add_edges_from(e.edges)
    return g


def nx_face_lengths(e):
    """Face lengths from networkx's own half-edge structure built from our rotations."""
    emb = nx.PlanarEmbedding()
    for v, rot in enumerate(e.rotations):
        emb.add_node(v)
        # networkx stores clockwise order via add_half_edge_cw
        prev = None
        for u in rot:
            if prev is None:
                emb.add_half_edge_first(v, u)
            else:
                emb.add_half_edge_cw(v, u, prev)
            prev = u
    emb.check_structure()
    seen = set()
    lengths = []
    for u, v in emb.edges():
        if (u, v) not in seen:
            lengths.append(len(emb.traverse_face(u, v, mark_half_edges=seen)))
    return sorted(lengths)


def cube():
    return make_grid(4, 2).embedding


# -- construction and validation ---------------------------------------------

def test_cube_has_six_square_faces():
    e = cube()
    assert e.n == 8 and all(e.degree(v) == 3 for v in range(8))
    assert sorted(f.length for f in e.faces) == [4] * 6
    assert 8 - 12 + 6 == euler_characteristic(e) == 2


def test_single_triangle_two_faces():
    e = cycle_graph(3)
    assert [f.length for f in e.faces] == [3, 3]


def test_asymmetric_table_rejected():
    with pytest.raises(AsymmetricAdjacency):
        build_embedding([[1], []])


def test_duplicate_and_loop_rejected():
    with pytest.raises(DuplicateNeighbor):
        build_embedding([[1, 1], [0]])
    with pytest.raises(SelfLoop):
        build_embedding([[0]])


def test_rotations_are_canonical():
    a = build_embedding([[3, 1, 2], [2, 3, 0], [3, 0, 1], [1, 0, 2]])
    b = build_embedding({0: [1, 2, 3], 1: [0, 2, 3], 2: [0, 1, 3], 3: [0, 2, 1]})
    assert a == b
    assert all(rot[0] == min(rot) for rot in a.rotations)


# -- faces -----------------------------------------------------------------------

def test_grid_face_census():
    e = make_grid(4, 3).embedding
    assert (e.n, e.num_edges) == (12, 20)
    assert sorted(f.length for f in e.faces) == [4] * 10


def test_three_by_two_grid():
    e = make_grid(3, 2).embedding
    assert sorted(f.length for f in e.faces) == [3, 3, 4, 4, 4]


def test_path_single_walk():
    e = path_graph(2)
    assert [f.length for f in e.faces] == [2]


def test_disconnected_face_tracing_rejected():
    e = build_embedding([[1], [0], [3], [2]])
    with pytest.raises(DisconnectedEmbedding):
        trace_faces(e)


@pytest.mark.parametrize("build", [cube, complete4, octahedron, icosahedron, lambda: make_grid(5, 4).embedding])
def test_faces_match_networkx(build):
    e = build()
    assert sorted(f.length for f in e.faces) == nx_face_lengths(e)


def test_icosahedron_and_octahedron_census():
    assert [f.length for f in icosahedron().faces] == [3] * 20
    assert [f.length for f in octahedron().faces] == [3] * 8
    assert nx.check_planarity(to_nx(icosahedron()))[0]


def random_maps(seed, count, two_connected=False):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(3, 18)
        yield random_two_connected_map(n, rng) if two_connected else random_map(n, rng)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_darts_partitioned_and_euler(seed):
    e = next(random_maps(seed, 1))
    darts = [d for f in e.faces for d in f.darts]
    assert len(darts) == len(set(darts)) == 2 * e.num_edges
    assert sum(f.length for f in e.faces) == 2 * e.num_edges
    assert euler_characteristic(e) == 2
    assert sorted(f.length for f in e.faces) == nx_face_lengths(e)


def test_embedding_from_faces_roundtrip():
    for e in random_maps(3, 30, two_connected=True):
        again = embedding_from_faces(e.n, [f.vertices for f in e.faces])
        assert again == e


def test_text_format_roundtrip():
    for e in random_maps(5, 30):
        text = format_embedding(e)
        assert text.startswith("planar-rot v1\n") and text.endswith("\n")
        assert parse_embedding(text) == e
        assert format_embedding(parse_embedding(text)) == text


def test_text_format_exact():
    assert format_embedding(cycle_graph(3)) == "planar-rot v1\n0: 1 2\n1: 0 2\n2: 0 1\n"


# -- edits -----------------------------------------------------------------------

def test_edits_keep_sphere():
    e = make_grid(4, 3).embedding
    f = e.face_of(0, 1)
    e2 = add_edge_in_face(e, f, 0, 2)
    assert euler_characteristic(e2) == 2 and len(e2.faces) == len(e.faces) + 1
    e3 = subdivide_edge(e, 0, 4)
    assert e3.n == 13 and sorted(f.length for f in e3.faces).count(5) == 2
    e4 = add_vertex_in_face(e, f, [0, 1, 2, 3])
    assert sorted(x.length for x in e4.faces).count(3) == 4 and euler_characteristic(e4) == 2


# -- distances ---------------------------------------------------------------------

def test_set_distance_examples():
    p = path_graph(5)
    assert set_distance(p, {2}, {2}) == 0
    assert set_distance(p, {0}, {4}) == 4
    with pytest.raises(EmptySet):
        set_distance(p, set(), {1})
    assert set_distance(build_embedding([[1], [0], [3], [2]]), {0}, {2}) == INF


def two_triangles_with_path(length):
    # triangle 0,1,2 and triangle a,b,c joined 2 ... a by a path with `length` edges
    adj = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
    prev = 2
    nxt = 3
    for _ in range(length):
        adj.setdefault(prev, set()).add(nxt)
        adj[nxt] = {prev}
        prev, nxt = nxt, nxt + 1
    a = prev
    b, c = nxt, nxt + 1
    adj[a] |= {b, c}
    adj[b] = {a, c}
    adj[c] = {a, b}
    return adj


@pytest.mark.parametrize("length", [1, 5, 6])
def test_triangle_pair_distance_against_networkx(length):
    adj = two_triangles_with_path(length)
    g = nx.Graph([(u, v) for u, ns in adj.items() for v in ns])
    tris = find_triangles(adj)
    assert len(tris) == 2
    expected = min(nx.shortest_path_length(g, x, y) for x in tris[0] for y in tris[1])
    assert min_triangle_pair_distance(adj) == expected == length
    assert set_distance(adj, tris[0], tris[1]) == length


def test_k4_triangles():
    assert len(find_triangles(complete4())) == 4
    assert min_triangle_pair_distance(complete4()) == 0
    assert min_triangle_pair_distance(make_grid(5, 4).embedding) == INF
    assert find_triangles(make_grid(5, 4).embedding) == []


def test_set_distance_symmetric_and_triangle_inequality():
    e = next(random_maps(11, 1))
    g = to_nx(e)
    d = dict(nx.all_pairs_shortest_path_length(g))
    for x, y, z in itertools.islice(itertools.product(range(e.n), repeat=3), 2000):
        assert set_distance(e, {x}, {y}) == set_distance(e, {y}, {x}) == d[x][y]
        assert d[x][z] <= d[x][y] + d[y][z]


# -- cycles ---------------------------------------------------------------------

def test_separating_cycles():
    e = octahedron()
    # 3,4,5 is the inner triangle; the equator 1,5,4,2 ... use 0-4-3-1-5? pick by search
    cycles4 = [c for c in itertools.permutations(range(6), 4)
               if c[0] == min(c) and c[1] < c[3]
               and all(e.has_edge(c[i], c[(i + 1) % 4]) for i in range(4))]
    assert cycles4
    for c in cycles4:
        inside = set(range(6)) - set(c)
        # the equators of the octahedron leave the two poles on opposite sides
        assert is_separating_cycle(e, c) == (len(inside) == 2 and not e.has_edge(*inside))
    g = make_grid(4, 3)
    assert is_separating_cycle(g.embedding, g.hoop(2))
    assert not is_separating_cycle(g.embedding, g.hoop(1))
    left, right = cycle_sides(g.embedding, g.hoop(2))
    assert {frozenset(left), frozenset(right)} == {frozenset(g.hoop(1)), frozenset(g.hoop(3))}


def test_facial_cycle_never_separates():
    for e in random_maps(2, 20, two_connected=True):
        for f in e.faces:
            assert not is_separating_cycle(e, f.vertices)


def test_not_a_cycle():
    with pytest.raises(NotACycle):
        is_separating_cycle(cube(), [0, 1, 2])
    with pytest.raises(NotACycle):
        is_induced_cycle(cube(), [0, 5, 6, 7])


def test_induced_cycles():
    assert is_induced_cycle(cycle_graph(5), [0, 1, 2, 3, 4])
    c4d = build_embedding([[1, 2, 3], [0, 2], [1, 3, 0], [2, 0]])
    assert not is_induced_cycle(c4d, [0, 1, 2, 3])
    g = make_grid(5, 4)
    assert all(is_induced_cycle(g.embedding, h) for h in g.hoops)


# -- identification -------------------------------------------------------------------

def test_identify_path_ends():
    out = identify_vertices(path_graph(3), 0, 2)
    assert out == {0: frozenset({1}), 1: frozenset({0})}


def test_identify_c4_diagonal_brute_force():
    out = identify_vertices(cycle_graph(4), 0, 2)
    assert len(out) == 3 and sum(len(v) for v in out.values()) == 4
    assert out[0] == {1, 3} and out[1] == {0} and out[3] == {0}


def test_identify_c6_opposite():
    out = identify_vertices(cycle_graph(6), 0, 3)
    g = nx.Graph([(u, v) for u, ns in out.items() for v in ns])
    bowtie = nx.Graph([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    assert nx.is_isomorphic(g, bowtie)


def test_identify_adjacent_rejected():
    with pytest.raises(AdjacentPair):
        identify_vertices(cycle_graph(4), 0, 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_identification_is_simple_and_drops_one_vertex(seed):
    e = next(random_maps(seed, 1))
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(e.n) for v in range(u + 1, e.n) if not e.has_edge(u, v)]
    if not pairs:
        return
    u, v = rng.choice(pairs)
    out = identify_vertices(e, u, v)
    assert len(out) == e.n - 1 and v not in out
    for x, ns in out.items():
        assert x not in ns
        for y in ns:
            assert x in out[y]
    expected = nx.contracted_nodes(to_nx(e), u, v, self_loops=False)
    assert set(expected.nodes) == set(out)
    assert {frozenset(x) for x in expected.edges} == {frozenset((a, b)) for a, ns in out.items() for b in ns}
