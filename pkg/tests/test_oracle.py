import json
import random

import networkx as nx
import pytest

from planar3col.coloring import ImproperColoring, validate_coloring
from planar3col.cylinder import make_grid
from planar3col.embedding import euler_characteristic, find_triangles, min_triangle_pair_distance
from planar3col.generate import (
    InfeasibleConstraint,
    canonical_code,
    exhaustive_maps,
    gen_planar,
    plane_trees,
    random_map,
    random_two_connected_map,
)
from planar3col.hosts import complete4, cycle_graph, grotzsch_adjacency, icosahedron, octahedron
from planar3col.oracle import (
    PrecoloringInstance,
    brute_force_3colorable,
    enumerate_3colorings,
    is_critical,
    mainlemma_statistic,
    solve_3coloring,
)
from planar3col.scans import (
    ScanReport,
    Witness,
    load_witnesses,
    scan_aksionov,
    scan_grotzsch,
    scan_havel,
)


def nx_graph(e):
    g = nx.Graph()
    g.add_nodes_from(range(e.n))
    g.add_edges_from(e.edges)
    return g


# -- the solver -------------------------------------------------------------------

def test_k4_unsatisfiable():
    assert solve_3coloring(complete4()) is None
    assert not brute_force_3colorable(complete4())


@pytest.mark.parametrize("k", [4, 6, 8, 10])
def test_even_cycles(k):
    phi = solve_3coloring(cycle_graph(k))
    validate_coloring(cycle_graph(k), phi)


def test_odd_cycle_with_precoloring():
    phi = solve_3coloring(cycle_graph(5), {0: 1, 2: 1})
    assert phi[0] == phi[2] == 1
    assert solve_3coloring(cycle_graph(3), {0: 1, 1: 2})[2] == 3
    # opposite octahedron vertices must share a color
    e = octahedron()
    u, v = next((0, x) for x in range(1, 6) if not e.has_edge(0, x))
    assert solve_3coloring(e, {u: 1, v: 2}) is None
    assert solve_3coloring(e, {u: 1, v: 1}) is not None
    with pytest.raises(ImproperColoring):
        solve_3coloring(cycle_graph(3), {0: 1, 1: 1})


def test_grotzsch_graph():
    g = grotzsch_adjacency()
    assert len(g) == 11 and sum(len(v) for v in g.values()) == 40
    # chromatic number four: no 3-coloring exists
    assert solve_3coloring(g) is None
    assert len(enumerate_3colorings(g)) == 0


def test_octahedron_counts():
    e = octahedron()
    assert len(enumerate_3colorings(e)) == 6
    assert len(enumerate_3colorings(e, {0: 1})) == 2


def test_enumeration_limit():
    with pytest.raises(ValueError):
        enumerate_3colorings(make_grid(7, 2).embedding)


def test_solver_agrees_with_enumeration():
    rng = random.Random(12)
    for _ in range(150):
        e = random_map(rng.randint(3, 10), rng)
        pre = {}
        for v in rng.sample(range(e.n), rng.randint(0, 3)):
            pre[v] = rng.randint(1, 3)
        if any(pre.get(u) == c for v, c in pre.items() for u in e.neighbors(v)):
            continue
        phi = solve_3coloring(e, pre)
        assert (phi is not None) == brute_force_3colorable(e, pre)
        if phi is not None:
            validate_coloring(e, phi)
            assert all(phi[v] == c for v, c in pre.items())


def test_instance_wrapper():
    inst = PrecoloringInstance(cycle_graph(4), {0: 1, 2: 2})
    phi = inst.solve()
    assert phi[1] == phi[3] == 3


def test_rng_only_changes_which_coloring():
    e = make_grid(5, 4).embedding
    seen = set()
    for seed in range(10):
        phi = solve_3coloring(e, rng=random.Random(seed))
        validate_coloring(e, phi)
        seen.add(tuple(sorted(phi.items())))
    assert len(seen) > 1


# -- criticality and the face statistic ---------------------------------------------

def test_k4_critical():
    assert is_critical(complete4(), [], {})
    assert mainlemma_statistic(complete4()) == (0, 4)


def test_colorable_is_not_critical():
    c = cycle_graph(5)
    assert not is_critical(c, [0, 1, 2, 3, 4], {0: 1, 1: 2, 2: 1, 3: 2, 4: 3})


def test_extendable_and_pendant_not_critical():
    # a 4-cycle with chord 0-2: coloring the edge 0-1 always extends
    adj = {0: [1, 2, 3], 1: [0, 2], 2: [1, 3, 0], 3: [2, 0]}
    assert is_critical(adj, [0, 1], {0: 1, 1: 2}) is False
    # K4 plus a pendant vertex is not critical
    adj = {v: list(ns) for v, ns in enumerate(complete4().rotations)}
    adj[4] = [0]
    adj[0] = adj[0] + [4]
    assert not is_critical(adj, [], {})


def test_wheel_w5_critical():
    # odd wheel: hub 5 on a 5-cycle
    adj = {i: [(i + 1) % 5, (i - 1) % 5, 5] for i in range(5)}
    adj[5] = list(range(5))
    assert solve_3coloring(adj) is None and is_critical(adj, [], {})


def test_statistic_examples():
    assert mainlemma_statistic(icosahedron()) == (0, 20)
    assert mainlemma_statistic(make_grid(5, 3).embedding) == (10, 0)
    assert mainlemma_statistic(make_grid(4, 3).embedding, make_grid(4, 3).hoop(1)) == (4, 0)
    with pytest.raises(ValueError):
        mainlemma_statistic(make_grid(4, 3).embedding, make_grid(4, 3).hoop(2))


# -- generators -------------------------------------------------------------------------

def test_plane_tree_counts():
    # unlabeled plane trees without reflection (OEIS A002995)
    assert [len(plane_trees(n, mirror=False)) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 14, 34]
    assert len(plane_trees(7)) == 12 and len(plane_trees(8)) == 27


def test_triangle_free_n4():
    graphs = [nx_graph(e) for e in exhaustive_maps(4, "triangle_free")]
    refs = [nx.path_graph(4), nx.star_graph(3), nx.cycle_graph(4)]
    assert len(graphs) == 3
    for ref in refs:
        assert sum(nx.is_isomorphic(ref, g) for g in graphs) == 1


def atlas_connected_planar(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n
            and nx.is_connected(g) and nx.check_planarity(g)[0]]


@pytest.mark.parametrize("n", range(2, 7))
def test_underlying_graphs_cover_atlas(n):
    maps = list(exhaustive_maps(n))
    assert all(euler_characteristic(e) == 2 for e in maps)
    ours = []
    for e in maps:
        g = nx_graph(e)
        if not any(nx.is_isomorphic(g, h) for h in ours):
            ours.append(g)
    ref = atlas_connected_planar(n)
    assert len(ours) == len(ref)
    for h in ref:
        assert any(nx.is_isomorphic(g, h) for g in ours)


def test_maps_are_distinct_up_to_isomorphism():
    maps = list(exhaustive_maps(6))
    codes = {canonical_code(e.rotations) for e in maps}
    assert len(codes) == len(maps)
    # a relabeled copy gets the same code
    rng = random.Random(0)
    for e in maps[:50]:
        perm = list(range(e.n))
        rng.shuffle(perm)
        rots = [None] * e.n
        for v, rot in enumerate(e.rotations):
            rots[perm[v]] = [perm[u] for u in rot]
        assert canonical_code(rots) == canonical_code(e.rotations)


def test_constraints_hold():
    for e in gen_planar(7, "max_one_triangle", n_min=3):
        assert len(find_triangles(e)) <= 1
    rng = random.Random(1)
    for _ in range(30):
        e = random_map(rng.randint(6, 20), rng, "min_triangle_distance", 3)
        assert min_triangle_pair_distance(e) >= 3


def test_random_generation_is_seeded():
    a = [e.rotations for e in gen_planar(12, exhaustive=False, count=20, seed=5, n_min=4)]
    b = [e.rotations for e in gen_planar(12, exhaustive=False, count=20, seed=5, n_min=4)]
    assert a == b and len(a) == 20


def test_generator_errors():
    with pytest.raises(ValueError):
        list(gen_planar(5, "nonsense"))
    with pytest.raises(InfeasibleConstraint):
        list(gen_planar(5, "min_triangle_distance", -1))


def test_two_connected_maps_have_cycle_faces():
    rng = random.Random(2)
    for _ in range(40):
        e = random_two_connected_map(rng.randint(3, 20), rng)
        assert all(f.is_cycle() for f in e.faces)


# -- scans -------------------------------------------------------------------------------

def test_grotzsch_scan_small():
    rep = scan_grotzsch(n=7, jobs=1)
    assert rep.failures == 0 and rep.colorable == rep.instances


def test_aksionov_scan_small():
    rep = scan_aksionov(n=7, jobs=1)
    assert rep.failures == 0 and rep.checks > rep.instances


def test_aksionov_orbit_representatives_match_all_colorings():
    a = scan_aksionov(n=6, jobs=1)
    b = scan_aksionov(n=6, jobs=1, all_colorings=True)
    assert a.failures == b.failures == 0
    assert a.instances == b.instances and b.checks > a.checks


def test_havel_scan_finds_k4_and_w5():
    rep = scan_havel(n=6, delta=0, jobs=1)
    assert rep.failures == 0 and rep.witnesses
    assert "n=4 sum_faces=0 triangles=4" in rep.extra["critical"]
    assert "n=6 sum_faces=5 triangles=5" in rep.extra["critical"]
    assert all(w.verify() for w in rep.witnesses)


def test_jobs_do_not_change_reports():
    a = scan_aksionov(n=7, jobs=1)
    b = scan_aksionov(n=7, jobs=3)
    assert a.to_text() == b.to_text()


def test_report_text_and_json():
    rep = scan_havel(n=4, jobs=1)
    text = rep.to_text()
    assert text.startswith("report v1\nmode: havel\n") and "seconds" not in text
    assert "seconds: " in rep.to_text(timing=True)
    data = json.loads(rep.to_json())
    assert data["schema"] == "report v1" and data["instances"] == rep.instances
    assert len(data["witnesses"]) == len(rep.witnesses) == 1


def test_witness_roundtrip(tmp_path):
    rep = scan_havel(n=5, jobs=1)
    paths = rep.write_witnesses(tmp_path)
    assert len(paths) == len(rep.witnesses)
    back = load_witnesses(tmp_path)
    assert [w.embedding for w in back] == [w.embedding for w in rep.witnesses]


def test_load_rejects_fake_witness(tmp_path):
    fake = ScanReport("havel", witnesses=[Witness(cycle_graph(4), {0: 1})])
    fake.write_witnesses(tmp_path)
    with pytest.raises(ValueError):
        load_witnesses(tmp_path)


def test_precolored_rim_critical():
    # K4 with its outer triangle precolored: each spoke is needed
    assert is_critical(complete4(), [0, 1, 2], {0: 1, 1: 2, 2: 3})
    # on the odd wheel a spoke to a repeated rim color is redundant
    adj = {i: [(i + 1) % 5, (i - 1) % 5, 5] for i in range(5)}
    adj[5] = list(range(5))
    assert solve_3coloring(adj, dict(enumerate((1, 2, 1, 2, 3)))) is None
    assert not is_critical(adj, range(5), dict(enumerate((1, 2, 1, 2, 3))))
