"""Registry, composition rules, wheel tables, and jump behavior."""

import math

import pytest

from unitdim.engine import (
    CROSSINGS,
    DIM,
    JUMP,
    NO_JUMP,
    NON_CROSSING,
    SDIM,
    EmbedderBudget,
    Engine,
    EngineError,
    NEG_INF,
    RegistryMiss,
    circle_profile_for_shape,
    classify_family,
    jump_test,
    known_sdim,
    sum_dimension,
    unit_circle_feasible,
    wheel_dimension,
)
from unitdim.geometry import simplex_radius
from unitdim.graphs import (
    Graph,
    all_graphs,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    family,
    join,
    path_graph,
)
from unitdim.profiles import RadiusProfile, point

ROOT_HALF = math.sqrt(2) / 2


@pytest.fixture(scope="module")
def eng():
    return Engine(CROSSINGS, use_embedder=True)


@pytest.fixture(scope="module")
def eng_rules():
    return Engine(CROSSINGS, use_embedder=False)


@pytest.fixture(scope="module")
def eng_nc():
    return Engine(NON_CROSSING, use_embedder=True)


# -- registry -----------------------------------------------------------------

def test_known_sdim_examples():
    b, prof = known_sdim(cycle_graph(6), CROSSINGS)
    assert b.value == 3 and prof.unspecified

    b, prof = known_sdim(family("S:5"), CROSSINGS)
    assert b.value == 4
    assert prof.pieces[0].lo == pytest.approx(1 / math.sqrt(3), abs=1e-12)
    assert prof.pieces[0].hi == 1.0 and prof.pieces[0].lo_open

    b, prof = known_sdim(family("E:3"), CROSSINGS)
    assert b.value == 2 and prof.is_full()


def test_known_sdim_s4_profile():
    b, prof = known_sdim(family("S:4"), CROSSINGS)
    assert b.value == 3
    assert prof.pieces[0].lo == pytest.approx(0.5, abs=1e-12)


def test_known_sdim_cycles_by_mode():
    assert known_sdim(cycle_graph(7), CROSSINGS)[0].value == 2
    assert known_sdim(cycle_graph(7), NON_CROSSING)[0].value == 3
    for n in (3, 4, 5):
        assert known_sdim(cycle_graph(n), CROSSINGS)[0].value == 2
        assert known_sdim(cycle_graph(n), NON_CROSSING)[0].value == 2
    assert known_sdim(cycle_graph(6), NON_CROSSING)[0].value == 3


def test_known_sdim_cliques():
    for n in range(2, 9):
        b, prof = known_sdim(complete_graph(n), CROSSINGS)
        assert b.value == n - 1
        assert prof.pieces == (point(simplex_radius(n)),)
        assert prof.complete


def test_registry_miss_for_odd_graph():
    paw = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    with pytest.raises(RegistryMiss):
        known_sdim(paw, CROSSINGS)


def test_registry_sdim_chain():
    # Appending one apex to a clique raises its spherical dimension by one.
    for n in range(3, 9):
        a = known_sdim(complete_graph(n), CROSSINGS)[0].value
        b = known_sdim(complete_graph(n - 1), CROSSINGS)[0].value
        assert a == b + 1


# -- circle profiles -----------------------------------------------------------

def test_circle_profile_cycle_star_set():
    prof = circle_profile_for_shape((("cycle", 7),), CROSSINGS)
    radii = sorted(p.lo for p in prof.pieces)
    expected = sorted(
        1 / (2 * math.sin(math.pi * m / 7)) for m in (2, 3)
    )  # m=1 has radius above 1 and is clipped
    assert radii == pytest.approx(expected, abs=1e-12)


def test_circle_profile_cycle_non_crossing_single_point():
    prof = circle_profile_for_shape((("cycle", 5),), NON_CROSSING)
    assert len(prof.pieces) == 1 and prof.pieces[0].is_point
    prof6 = circle_profile_for_shape((("cycle", 6),), NON_CROSSING)
    assert prof6.pieces == ()  # the hexagon needs radius exactly 1


def test_circle_profile_paths_non_crossing():
    prof = circle_profile_for_shape((("path", 2), ("path", 3),), NON_CROSSING)
    assert len(prof.pieces) == 1
    piece = prof.pieces[0]
    assert piece.lo == pytest.approx(1 / (2 * math.sin(math.pi / 5)), abs=1e-12)
    assert piece.lo_open and piece.hi == 1.0


def test_circle_profile_paths_crossings_excludes_small_grids():
    # A 3-edge path cannot sit at the radius whose step angle is a third of
    # a turn (only three slots), but radii on either side work.
    prof = circle_profile_for_shape((("path", 3),), CROSSINGS)
    bad = 1 / (2 * math.sin(math.pi / 3))
    assert not prof.contains(bad)
    assert prof.contains(bad - 1e-6)
    assert prof.contains(bad + 1e-6)


def test_circle_profile_mixed_cycle_blocks_non_crossing():
    shape = (("cycle", 3), ("path", 1))
    assert circle_profile_for_shape(shape, NON_CROSSING).pieces == ()
    crossings = circle_profile_for_shape(shape, CROSSINGS)
    assert crossings.contains(1 / math.sqrt(3))


def test_circle_profile_two_triangles():
    shape = (("cycle", 3), ("cycle", 3))
    assert circle_profile_for_shape(shape, CROSSINGS).contains(1 / math.sqrt(3))
    assert circle_profile_for_shape(shape, NON_CROSSING).pieces == ()


def test_unit_circle_feasibility():
    assert unit_circle_feasible((("cycle", 6),), NON_CROSSING)
    assert not unit_circle_feasible((("cycle", 5),), NON_CROSSING)
    assert not unit_circle_feasible((("cycle", 6), ("path", 1)), NON_CROSSING)
    assert unit_circle_feasible((("path", 5),), NON_CROSSING)
    assert not unit_circle_feasible((("path", 6),), NON_CROSSING)
    assert not unit_circle_feasible((("path", 3), ("path", 3)), NON_CROSSING)
    # Crossings allowed: components use independent rotations.
    assert unit_circle_feasible((("path", 3), ("path", 3)), CROSSINGS)
    assert unit_circle_feasible((("cycle", 6), ("cycle", 6)), CROSSINGS)
    assert not unit_circle_feasible((("cycle", 4),), CROSSINGS)


# -- dimension pipeline -----------------------------------------------------------

def test_dim_examples(eng):
    assert eng.dim(complete_graph(7)).value == 6
    assert eng.dim(family("W:6:1")).value == 2
    assert eng.dim(cycle_graph(9)).value == 2
    assert eng.dim(path_graph(5)).value == 1
    assert eng.dim(empty_graph(3)).value == 1
    assert eng.dim(empty_graph(1)).value == 0
    assert eng.dim(empty_graph(0)).value is NEG_INF


def test_dim_star_is_two(eng):
    assert eng.dim(family("S:4")).value == 2


def test_sum_examples(eng):
    assert sum_dimension([family("E:3"), family("E:3")]).value == 4
    assert sum_dimension([family("C:6"), family("E:2")]).value == 4
    for n in (1, 2, 3, 4):
        got = sum_dimension([family(f"S:{n}"), family("E:3")])
        assert got.value == n + 1


def test_sum_rejects_single_factor():
    with pytest.raises(EngineError):
        sum_dimension([family("K:3")])


def test_sum_of_triples_always_four(eng):
    for a in range(3, 7):
        for b in range(3, 7):
            got = eng.dim(join(empty_graph(a), empty_graph(b)))
            assert got.exact and got.value == 4


def test_wheel_table_against_pipeline(eng, eng_nc):
    for n in range(3, 10):
        for k in (1, 2, 3):
            g = family(f"W:{n}:{k}")
            assert eng.dim(g).value == wheel_dimension(n, k, False)
            assert eng_nc.dim(g).value == wheel_dimension(n, k, True)


def test_wheel_table_large_rims(eng_rules):
    engn = Engine(NON_CROSSING, use_embedder=False)
    for n in (12, 20):
        for k in (1, 2, 3):
            g = family(f"W:{n}:{k}")
            assert eng_rules.dim(g).value == wheel_dimension(n, k, False)
            assert engn.dim(g).value == wheel_dimension(n, k, True)


def test_wheel_dimension_domain():
    with pytest.raises(EngineError):
        wheel_dimension(2, 1)
    with pytest.raises(EngineError):
        wheel_dimension(3, 0)


def test_petersen_gets_bounds_not_lies(eng_rules):
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    petersen = Graph(10, outer + inner + spokes)
    b = eng_rules.dim(petersen)
    assert b.lower >= 2
    assert b.upper is None or b.upper >= b.lower


def test_certificates_attached(eng):
    b = eng.dim(family("W:6:2"))
    rules = {c.rule for c in b.certificates}
    assert "join-split" in rules and "join-sum" in rules
    payload = b.to_json()
    assert payload["exact"] and payload["lower"] == 4
    assert all({"side", "bound", "rule", "anchor", "inputs"} <= set(c)
               for c in payload["certificates"])


def test_sdim_exact_for_all_small_graphs(eng):
    # Sandwiches close for every graph on up to 5 vertices.
    expected_counts = {2: 11, 3: 19, 4: 4}
    from collections import Counter

    counts = Counter()
    for g in all_graphs(5):
        b = eng.sdim(g)
        assert b.exact, (g.edges, str(b))
        counts[b.value] += 1
    assert dict(counts) == expected_counts


def test_engine_lower_never_exceeds_found_embedding(eng):
    # Spot the soundness invariant: any valid found embedding sits at or
    # above the rule lower bound.
    from unitdim.embedder import EmbedRequest, find_embedding, validate

    for g in all_graphs(4):
        b = eng.dim(g)
        if not isinstance(b.lower, int) or b.lower < 1:
            continue
        for d in range(1, b.lower):
            req = EmbedRequest(g, d, restarts=30, seed=5)
            found = find_embedding(req)
            assert found is None, (g.edges, d)


# -- jump test -------------------------------------------------------------------

def test_jump_full_profile_no_jump():
    prof = known_sdim(family("E:3"), CROSSINGS)[1]
    assert jump_test(prof).kind == NO_JUMP


def test_jump_non_crossing_pentagon():
    prof = known_sdim(cycle_graph(5), NON_CROSSING)[1]
    res = jump_test(prof)
    assert res.kind == JUMP and res.at == 2


def test_jump_boundary_fixed_point():
    res = jump_test(RadiusProfile(2, (point(ROOT_HALF),), complete=True))
    assert res.kind == NO_JUMP


def test_jump_cliques_never(eng):
    for n in range(2, 9):
        prof = known_sdim(complete_graph(n), CROSSINGS)[1]
        assert jump_test(prof).kind == NO_JUMP


def test_jump_needs_pinned_values():
    with pytest.raises(EngineError):
        jump_test(RadiusProfile(3, (), unspecified=True))


# -- profiles through the engine ----------------------------------------------------

def test_profile_lifting(eng):
    prof = eng.profile_at(complete_graph(4), 4)
    rho = simplex_radius(4)
    assert prof.contains(rho) and prof.contains(0.9)
    assert not prof.contains(rho - 1e-3)


def test_profile_below_sdim_is_empty_complete(eng):
    prof = eng.profile_at(family("E:3"), 1)
    assert prof.pieces == () and prof.complete


def test_classify_family_cases():
    assert classify_family(family("S:6")).kind == "s_family"
    assert classify_family(complete_graph(5)).kind == "complete"
    assert classify_family(disjoint_union(cycle_graph(4), path_graph(2))).kind == "maxdeg2"
    assert classify_family(family("W:5:2")) is None


def test_mode_validation():
    with pytest.raises(EngineError):
        Engine("diagonal")
    with pytest.raises(EngineError):
        known_sdim(cycle_graph(5), "diagonal")
