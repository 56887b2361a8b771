"""Graph core: families, minors, canonical labeling, petals, decomposition."""

import random
from itertools import combinations, permutations

import pytest

from unitdim.graphs import (
    EDGE_CONTRACTION,
    EDGE_REMOVAL,
    VERTEX_REMOVAL,
    Graph,
    GraphError,
    MinorOp,
    SizeCapError,
    all_graphs,
    apply_minor_op,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    clique_number,
    complete_graph,
    component_shape,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_petals,
    family,
    format_graph_text,
    is_path_union,
    join,
    join_decompose,
    max_clique_with_common_triple,
    minor_closure,
    parse_family,
    parse_graph_text,
    path_graph,
    petal_count_oracle,
)


def brute_canonical(g: Graph) -> bytes:
    """Reference canonical form: minimum over all n! orderings."""
    n = g.vertex_count
    if n == 0:
        return canonical_form(g)
    adj = g.adjacency_masks()
    best = None
    for perm in permutations(range(n)):
        bits = 0
        for i in range(n):
            for j in range(i + 1, n):
                bits = (bits << 1) | ((adj[perm[i]] >> perm[j]) & 1)
        if best is None or bits < best:
            best = bits
    nbits = n * (n - 1) // 2
    return bytes([n]) + best.to_bytes((nbits + 7) // 8 or 1, "big")


# -- construction and families ----------------------------------------------

def test_complete_graph_counts():
    g = family("K:4")
    assert g.vertex_count == 4 and g.edge_count == 6


def test_s4_is_star_on_four_vertices():
    g = family("S:4")
    assert g.vertex_count == 4 and g.edge_count == 3
    assert sorted(g.degrees()) == [1, 1, 1, 3]


def test_wheel_6_2_edge_count():
    # C_6 joined with two extra vertices: 6 rim edges + 12 join edges.
    g = family("W:6:2")
    assert g.vertex_count == 8 and g.edge_count == 18


def test_small_s_family_is_edgeless():
    for n in (1, 2, 3):
        g = family(f"S:{n}")
        assert g.vertex_count == n and g.edge_count == 0


def test_join_literal():
    g = family("J(S:4,E:3)")
    assert g.vertex_count == 7
    # S_4 edges (3) plus 4*3 join edges.
    assert g.edge_count == 15


def test_union_literal():
    g = family("U(K:3,K:3)")
    assert g.vertex_count == 6 and g.edge_count == 6
    assert len(g.components()) == 2


def test_family_parameter_errors():
    for bad in ("C:2", "W:2:1", "W:6:0", "S:0", "K:-1", "Q:3"):
        with pytest.raises(GraphError):
            family(bad)


def test_invalid_edges_rejected():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 5)])


# -- text format -------------------------------------------------------------

def test_text_round_trip():
    g = family("W:5:2")
    assert parse_graph_text(format_graph_text(g)) == g


def test_text_parse_errors_name_lines():
    with pytest.raises(GraphError, match="line 1"):
        parse_graph_text("x\n0 1\n")
    with pytest.raises(GraphError, match="line 3"):
        parse_graph_text("3\n0 1\n0 1 2\n")


# -- minor operations ---------------------------------------------------------

def test_triangle_contracts_to_edge():
    g = complete_graph(3)
    h = apply_minor_op(g, MinorOp(EDGE_CONTRACTION, (0, 1)))
    assert h.vertex_count == 2 and h.edge_count == 1


def test_hub_removal_recovers_rim():
    g = family("W:6:1")
    # Hub is the unique degree-6 vertex.
    hub = g.degrees().index(6)
    h = apply_minor_op(g, MinorOp(VERTEX_REMOVAL, hub))
    assert are_isomorphic(h, cycle_graph(6))


def test_edge_removal_from_k4():
    h = apply_minor_op(complete_graph(4), MinorOp(EDGE_REMOVAL, (0, 1)))
    assert h.vertex_count == 4 and h.edge_count == 5


def test_contraction_requires_adjacency():
    g = empty_graph(3)
    with pytest.raises(GraphError):
        apply_minor_op(g, MinorOp(EDGE_CONTRACTION, (0, 1)))


def test_minor_results_simple_and_smaller():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 6)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.5]
        g = Graph(n, edges)
        for _, m in __import__("unitdim.graphs", fromlist=["one_step_minors"]).one_step_minors(g):
            assert m.vertex_count <= g.vertex_count
            assert len(set(m.edges)) == m.edge_count
            assert all(u != v for u, v in m.edges)


# -- minor closure -------------------------------------------------------------

def test_epsilon1_proper_minors_is_empty_graph():
    closure = minor_closure(empty_graph(1), proper_only=True)
    assert len(closure) == 1 and closure[0].vertex_count == 0


def test_k4_closure_contains_k3():
    closure = minor_closure(complete_graph(4))
    assert any(are_isomorphic(m, complete_graph(3)) for m in closure)


def test_k3_proper_minor_set_matches_brute_force():
    closure = minor_closure(complete_graph(3), proper_only=True)
    # Graphs on <=2 vertices plus the 3-vertex minors of K_3: P_3, K_2+K_1,
    # E_3 are all reachable, along with K_2 (contraction).
    expected = {
        canonical_form(empty_graph(0)),
        canonical_form(empty_graph(1)),
        canonical_form(empty_graph(2)),
        canonical_form(complete_graph(2)),
        canonical_form(empty_graph(3)),
        canonical_form(path_graph(3)),
        canonical_form(disjoint_union(complete_graph(2), empty_graph(1))),
    }
    assert {canonical_form(m) for m in closure} == expected


def test_minor_closure_is_closed_small():
    from unitdim.graphs import one_step_minors

    for lit in ("K:4", "C:5", "W:4:1"):
        g = family(lit)
        closure = minor_closure(g)
        keys = {canonical_form(m) for m in closure}
        for m in closure:
            for _, step in one_step_minors(m):
                assert canonical_form(step) in keys


def test_closure_cap_enforced():
    with pytest.raises(SizeCapError):
        minor_closure(empty_graph(11))
    assert minor_closure(empty_graph(11), cap=11)


# -- canonical labeling ---------------------------------------------------------

def test_canonical_invariance_under_relabeling():
    rng = random.Random(0)
    for lit in ("K:4", "C:6", "W:5:1", "S:5", "J(S:4,E:3)", "P:6"):
        g = family(lit)
        ref = canonical_form(g)
        for _ in range(100):
            perm = list(range(g.vertex_count))
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == ref


def test_canonical_separates_non_isomorphic():
    assert canonical_form(path_graph(4)) != canonical_form(family("S:4"))
    assert canonical_form(cycle_graph(6)) != canonical_form(
        disjoint_union(cycle_graph(3), cycle_graph(3))
    )


def test_canonical_classifies_like_brute_force_small():
    # canonical_form must induce exactly the same isomorphism classes as the
    # reference min-over-all-permutations form.
    rng = random.Random(3)
    pool = []
    for _ in range(120):
        n = rng.randint(0, 5)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.5]
        pool.append(Graph(n, edges))
    for a in pool:
        for b in pool:
            assert (canonical_form(a) == canonical_form(b)) == (
                brute_canonical(a) == brute_canonical(b)
            )


def test_canonical_agrees_with_networkx_on_random_graphs():
    nx = pytest.importorskip("networkx")
    rng = random.Random(11)
    pool = []
    for _ in range(60):
        n = rng.randint(4, 9)
        p = rng.choice([0.2, 0.4, 0.6, 0.8])
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        pool.append(Graph(n, edges))
    for a in pool:
        for b in pool:
            if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
                continue
            ga = nx.Graph(list(a.edges))
            ga.add_nodes_from(range(a.vertex_count))
            gb = nx.Graph(list(b.edges))
            gb.add_nodes_from(range(b.vertex_count))
            assert (canonical_form(a) == canonical_form(b)) == nx.is_isomorphic(ga, gb)


def test_canonical_graph_realizes_form():
    g = family("W:6:2")
    cg = canonical_graph(g)
    assert are_isomorphic(g, cg)
    assert canonical_form(cg) == canonical_form(g)


def test_canonical_handles_regular_graphs():
    # Petersen graph: vertex-transitive, 3-regular, 10 vertices.
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    petersen = Graph(10, outer + inner + spokes)
    ref = canonical_form(petersen)
    rng = random.Random(5)
    for _ in range(20):
        perm = list(range(10))
        rng.shuffle(perm)
        assert canonical_form(petersen.relabel(perm)) == ref


# -- join decomposition ----------------------------------------------------------

def test_k33_decomposes_into_triples():
    g = join(empty_graph(3), empty_graph(3))
    factors = join_decompose(g)
    assert len(factors) == 2
    assert all(f.vertex_count == 3 and f.edge_count == 0 for f in factors)


def test_wheel_decomposes_into_rim_and_hubs():
    factors = join_decompose(family("W:6:2"))
    shapes = sorted((f.vertex_count, f.edge_count) for f in factors)
    assert shapes == [(2, 0), (6, 6)]


def test_c5_is_indecomposable():
    assert len(join_decompose(cycle_graph(5))) == 1


def test_join_round_trip_all_small_graphs():
    for n in range(1, 8):
        for g in all_graphs(n):
            again = join(*join_decompose(g))
            assert are_isomorphic(again, g)


# -- petals -----------------------------------------------------------------------

def test_petals_one_edge():
    petals = enumerate_petals(1)
    assert len(petals) == 1
    assert petals[0].vertex_count == 2 and petals[0].edge_count == 1


def test_petals_three_edges_exact_set():
    petals = enumerate_petals(3)
    keys = {canonical_form(p) for p in petals}
    expected = {
        canonical_form(path_graph(4)),
        canonical_form(disjoint_union(path_graph(3), path_graph(2))),
        canonical_form(disjoint_union(path_graph(2), path_graph(2), path_graph(2))),
        canonical_form(cycle_graph(3)),
    }
    assert keys == expected


def test_petals_include_full_cycle():
    assert any(are_isomorphic(p, cycle_graph(6)) for p in enumerate_petals(6))


def test_petal_shape_invariants():
    for n in range(1, 7):
        for p in enumerate_petals(n):
            assert p.edge_count == n
            assert max(p.degrees()) <= 2
            assert min(p.degrees()) >= 1


def test_petal_counts_match_partition_oracle():
    for n in range(1, 9):
        assert len(enumerate_petals(n)) == petal_count_oracle(n)


def test_petal_brute_force_cross_check():
    # Independent generation: filter all 6-vertex graphs for 5-edge petals
    # with no isolated vertices and compare against the stitched subsets.
    want = {
        canonical_form(p) for p in enumerate_petals(5) if p.vertex_count == 6
    }
    got = {
        canonical_form(g)
        for g in all_graphs(6)
        if g.edge_count == 5 and max(g.degrees()) <= 2 and min(g.degrees()) >= 1
    }
    assert want == got


# -- generation and probes ----------------------------------------------------------

def test_all_graphs_counts():
    assert [len(all_graphs(n)) for n in range(8)] == [1, 1, 2, 4, 11, 34, 156, 1044]


def test_clique_number_matches_brute_force():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(1, 7)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.5]
        g = Graph(n, edges)
        best = 1
        for k in range(2, n + 1):
            for sub in combinations(range(n), k):
                if all((min(a, b), max(a, b)) in set(g.edges) for a, b in combinations(sub, 2)):
                    best = max(best, k)
        assert clique_number(g) == best


def test_common_triple_probe():
    # S_6 = K_3 + E_3: the 3-clique sees three common neighbors.
    assert max_clique_with_common_triple(family("S:6")) == 3
    # A path has no degree-3 vertex at all.
    assert max_clique_with_common_triple(path_graph(5)) == 0
    assert max_clique_with_common_triple(family("S:4")) == 1


def test_shape_probes():
    assert is_path_union(disjoint_union(path_graph(3), path_graph(2)))
    assert not is_path_union(cycle_graph(4))
    assert component_shape(disjoint_union(cycle_graph(3), path_graph(4))) == [
        ("cycle", 3),
        ("path", 3),
    ]
    assert component_shape(complete_graph(4)) is None
