import itertools
import json
from collections import Counter

import pytest

from unbounded_hc.exact import feasible_with_unbounded, solve_exact
from unbounded_hc.generators import gen_generalized_petersen
from unbounded_hc.graph import Graph, complete_graph, path_graph
from unbounded_hc.reductions import (atsp_arc_count, atsp_tour_to_walk, emit_tsplib_atsp,
                                     find_hamiltonian_cycle, hcp_cycle_to_walk,
                                     is_hamiltonian_cycle, petersen_construction,
                                     to_atsp_instance, to_hcp_instance, tour_weight,
                                     walk_to_atsp_tour, walk_to_hcp_cycle)
from unbounded_hc.walks import normalize_walk, verify_walk

from support import random_connected_case


# -- HCP -------------------------------------------------------------------

def test_hcp_without_unbounded_is_identity():
    inst = to_hcp_instance(complete_graph(3), set())
    assert inst.graph == complete_graph(3)
    assert inst.label == (0, 1, 2)


def test_ring_gadget_on_p3():
    inst = to_hcp_instance(path_graph(3), {1})
    assert inst.graph.n == 5
    # ring of three plus both ends joined to every ring vertex
    assert inst.graph.m == 9
    ring = inst.members[1]
    for end in (inst.members[0][0], inst.members[2][0]):
        assert all(inst.graph.has_edge(end, r) for r in ring)
    assert not inst.graph.has_edge(inst.members[0][0], inst.members[2][0])


def test_ring_gadget_on_triangle():
    inst = to_hcp_instance(complete_graph(3), {0})
    assert (inst.graph.n, inst.graph.m) == (5, 10)


def test_p3_instance_hamiltonian_iff_feasible():
    inst = to_hcp_instance(path_graph(3), {1})
    cycle = find_hamiltonian_cycle(inst.graph)
    assert cycle is not None
    assert feasible_with_unbounded(path_graph(3), {1}) is not None
    assert find_hamiltonian_cycle(to_hcp_instance(path_graph(3), set()).graph) is None


@pytest.mark.parametrize("graph,ub", [
    (path_graph(3), {1}),
    (complete_graph(3), {0}),
    (complete_graph(3), set()),
    (path_graph(2), {0, 1}),
])
def test_hcp_round_trip(graph, ub):
    inst = to_hcp_instance(graph, ub)
    cycle = find_hamiltonian_cycle(inst.graph)
    walk = hcp_cycle_to_walk(inst, cycle)
    assert verify_walk(graph, walk, "cycle", claimed=ub).valid
    lifted = walk_to_hcp_cycle(inst, normalize_walk(graph, walk))
    assert is_hamiltonian_cycle(inst.graph, lifted)


def test_hcp_vertex_count_formula():
    g = random_connected_case(4, 6, 6)
    for size in range(4):
        for ub in itertools.combinations(range(g.n), size):
            assert to_hcp_instance(g, ub).graph.n == (g.n - size) + size * g.n


def test_hcp_rejects_non_hamiltonian_input():
    inst = to_hcp_instance(path_graph(3), {1})
    with pytest.raises(ValueError):
        hcp_cycle_to_walk(inst, (0, 1, 2, 3, 4))
    with pytest.raises(ValueError):
        to_hcp_instance(path_graph(3), {5})


def test_hcp_json_sidecar():
    data = json.loads(to_hcp_instance(path_graph(3), {1}).to_json())
    assert data["label"] == [0, 1, 1, 1, 2]


def test_hc_backtracker_small():
    assert find_hamiltonian_cycle(complete_graph(5)) is not None
    assert find_hamiltonian_cycle(path_graph(4)) is None
    assert find_hamiltonian_cycle(gen_generalized_petersen(5, 2)) is None


# -- ATSP ------------------------------------------------------------------

def test_k2_gadget():
    inst = to_atsp_instance(path_graph(2))
    assert inst.node_count == 12
    tour = walk_to_atsp_tour(inst, path_graph(2), (0, 1))
    assert tour_weight(inst, tour) == 0


def test_ladder_shape_n4():
    inst = to_atsp_instance(complete_graph(4))
    v = 2
    for i in range(1, 5):
        assert (inst.a(v, i), inst.b(v, i)) in inst.arcs
        assert (inst.b(v, i), inst.a(v, i)) in inst.arcs
        assert (inst.b(v, i), inst.c(v, i)) in inst.arcs
        if i >= 2:
            assert (inst.a(v, i), inst.c(v, i - 1)) in inst.arcs
            assert (inst.c(v, i - 1), inst.a(v, i)) in inst.arcs
    weighted = [arc for arc, w in inst.arcs.items() if w == 1]
    assert len(weighted) == 4
    assert (inst.a(v, 1), inst.b(v, 1)) in weighted


def test_arc_count_closed_form():
    for seed in range(20):
        g = random_connected_case(seed, 2, 7)
        inst = to_atsp_instance(g)
        assert inst.node_count == 3 * g.n * g.n
        assert len(inst.arcs) == atsp_arc_count(g.n, g.m)


def test_inter_gadget_arcs_respect_ports():
    g = path_graph(3)
    inst = to_atsp_instance(g)
    n = g.n
    exits = {v: set(inst.node_map[v]["c"]) | {inst.a(v, 1)} for v in range(n)}
    entries = {v: set(inst.node_map[v]["a"]) | {inst.c(v, n)} for v in range(n)}
    for (s, t) in inst.arcs:
        x, y = inst.owner(s), inst.owner(t)
        if x != y:
            assert g.has_edge(x, y)
            assert s in exits[x] and t in entries[y]


def test_triangle_and_p3_tours():
    tri = complete_graph(3)
    inst = to_atsp_instance(tri)
    tour = walk_to_atsp_tour(inst, tri, (0, 1, 2))
    assert tour_weight(inst, tour) == 0
    assert verify_walk(tri, atsp_tour_to_walk(inst, tour), "cycle").k == 0

    p3 = path_graph(3)
    inst = to_atsp_instance(p3)
    tour = walk_to_atsp_tour(inst, p3, (0, 1, 2, 1))
    assert tour_weight(inst, tour) == 1 == solve_exact(p3).m
    back = verify_walk(p3, atsp_tour_to_walk(inst, tour), "cycle")
    assert back.valid and back.k <= 1


def test_walk_to_tour_rejects_bad_walks():
    p3 = path_graph(3)
    inst = to_atsp_instance(p3)
    with pytest.raises(ValueError):
        walk_to_atsp_tour(inst, p3, (0, 1, 2))
    star = Graph.from_edges(3, [(0, 1), (0, 2)])
    inst = to_atsp_instance(star)
    # centre visited four times with n = 3 is not normalised
    with pytest.raises(ValueError):
        walk_to_atsp_tour(inst, star, (0, 1, 0, 2, 0, 1, 0, 2))


def test_tour_to_walk_rejects_non_tours():
    inst = to_atsp_instance(path_graph(2))
    with pytest.raises(ValueError):
        atsp_tour_to_walk(inst, tuple(range(12)))


def test_tsplib_atsp_text():
    inst = to_atsp_instance(path_graph(2))
    text = emit_tsplib_atsp(inst, name="k2")
    lines = text.strip().splitlines()
    assert "TYPE: ATSP" in lines
    assert "DIMENSION: 12" in lines
    assert "EDGE_WEIGHT_FORMAT: FULL_MATRIX" in lines
    start = lines.index("EDGE_WEIGHT_SECTION") + 1
    rows = [list(map(int, row.split())) for row in lines[start:start + 12]]
    assert all(len(r) == 12 for r in rows)
    assert all(rows[i][i] == 3 for i in range(12))
    a1, b1 = inst.a(0, 1), inst.b(0, 1)
    assert rows[a1][b1] == 1 and rows[b1][a1] == 0
    assert lines[-1] == "EOF"
    values = Counter(x for r in rows for x in r)
    assert values[0] + values[1] == len(inst.arcs)


def test_atsp_json_sidecar():
    data = json.loads(to_atsp_instance(path_graph(3)).to_json())
    assert data["nodes"] == 27
    assert len(data["node_map"]) == 3
    assert all(len(m["a"]) == 3 for m in data["node_map"])


# -- Petersen construction -------------------------------------------------

def test_petersen_n8():
    g = gen_generalized_petersen(8, 4)
    walk, ub = petersen_construction(8)
    rep = verify_walk(g, walk, "cycle", claimed=ub)
    assert rep.valid and rep.k == 2


def test_petersen_n12_named_vertices():
    n = 12
    g = gen_generalized_petersen(n, n // 2)
    walk, ub = petersen_construction(n)
    rep = verify_walk(g, walk, "cycle", claimed=ub)
    assert rep.valid and rep.k <= 3
    assert ub <= {n + n // 2 - 1, 2 * n - 1, n - 1}


@pytest.mark.parametrize("n", [16, 20, 24, 40])
def test_petersen_larger(n):
    g = gen_generalized_petersen(n, n // 2)
    walk, ub = petersen_construction(n)
    rep = verify_walk(g, walk, "cycle", claimed=ub)
    assert rep.valid and rep.k <= 3


@pytest.mark.parametrize("n", [4, 6, 10, 14])
def test_petersen_preconditions(n):
    with pytest.raises(ValueError):
        petersen_construction(n)
