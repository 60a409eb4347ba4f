"""Engines against oracles on seeded random instances."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equilevel import core
from equilevel import engines
from equilevel import generate
from equilevel import oracles
from equilevel.problems import basis
from equilevel.problems import conjunctive
from equilevel.problems import graphs
from equilevel.problems import housing
from equilevel.problems import marriage
from equilevel.problems import matching
from equilevel.problems import spanning
from equilevel.lattice import GlobalState

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)

@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(0, 6), st.integers(0, 6))
def test_matching_is_maximum(seed, n, m):
    inst, _params = generate.generate('matching', seed, n=n, m=m, density=0.4)
    adapter = matching.matching_adapter(inst)
    outcome = engines.detect_helpful(adapter, adapter.poset)
    assert outcome.found
    assert outcome.state.level == oracles.max_matching(inst)
    assert len(adapter.matched_pairs(outcome.state)) == outcome.state.level

@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(0, 5), st.integers(0, 4))
def test_basis_matches_rank(seed, n, m):
    vset, _params = generate.generate('basis', seed, n=n, m=m)
    adapter = basis.basis_adapter(vset)
    outcome = engines.detect_helpful(adapter, adapter.poset)
    assert outcome.state.level == oracles.matrix_rank(vset.vectors)
    assert basis.integer_rank(vset.vectors) == oracles.matrix_rank(vset.vectors)

@settings(max_examples=200, deadline=None)
@given(seeds, st.integers(1, 64), st.floats(0, 0.2))
def test_mst_engines_agree(seed, vertices, density):
    graph, _params = generate.generate(
        'mst', seed, vertices=vertices, density=density, unique_weights=True
    )
    expected_edges, expected_weight = oracles.kruskal_mst(graph)

    boruvka = spanning.boruvka_adapter(graph)
    states = []
    outcome = engines.detect_independently_helpful(
        boruvka, boruvka.poset, observer=lambda *args: states.append(args[2])
    )
    # every batch stays inside the minimum spanning forest
    for state in states:
        assert set(boruvka.edge_indices(state)) <= expected_edges
    assert boruvka.weight(outcome.state) == expected_weight
    # components at least halve every round
    assert 2 ** outcome.rounds <= 2 * vertices
    assert outcome.rounds <= math.ceil(math.log2(vertices)) + 1

    unique = spanning.unique_mst_adapter(graph)
    llp = engines.detect_llp(unique, unique.poset)
    assert frozenset(unique.edge_indices(llp.state)) == expected_edges

    parallel, adapter = core.detect('mst', graph, {}, 'parallel-mst')
    assert parallel.state == llp.state
    assert frozenset(adapter.edge_indices(parallel.state)) == expected_edges

    helpful = spanning.spanning_tree_adapter(graph)
    tree = engines.detect_helpful(helpful, helpful.poset)
    assert tree.state.level == vertices - graph.component_count()
    assert helpful.weight(tree.state) == expected_weight
    assert frozenset(helpful.edge_indices(tree.state)) == expected_edges

@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(1, 8), st.data())
def test_unique_mst_forbidden_is_stable(seed, vertices, data):
    graph, _params = generate.generate(
        'mst', seed, vertices=vertices, density=0.5, unique_weights=True
    )
    adapter = spanning.unique_mst_adapter(graph)
    width = len(adapter.poset.heights)
    bits = st.lists(st.integers(0, 1), min_size=width, max_size=width)
    g = GlobalState(data.draw(bits))
    h = g.join(GlobalState(data.draw(bits)))
    for j in range(len(g)):
        if not adapter.forbidden(j, g) and g[j] == h[j]:
            assert not adapter.forbidden(j, h)

@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(1, 4))
def test_marriage_engines_agree(seed, n):
    inst, _params = generate.generate('marriage', seed, n=n)
    adapter = marriage.stable_marriage_adapter(inst)
    llp = engines.detect_llp(adapter, adapter.poset)
    assert adapter.assignment(llp.state) == oracles.gale_shapley(inst)

    report = oracles.brute_force_detect(adapter, adapter.poset)
    assert report.least == llp.state
    assert report.greatest is not None
    refined = oracles.least_element_predicate(report)
    assert [g for g in report.satisfying_states if refined(g)] == [llp.state]

    bidi = engines.detect_bidirectional(adapter, adapter.poset)
    assert bidi.state in report.satisfying_states
    assert oracles.blocking_pairs(inst, adapter.assignment(bidi.state)) == []

@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(1, 6))
def test_housing_is_top_trading_cycles(seed, n):
    inst, _params = generate.generate('housing', seed, n=n)
    adapter = housing.housing_adapter(inst)
    outcome = engines.detect_llp(adapter, adapter.poset)
    allocation = adapter.allocation(outcome.state)
    assert allocation == oracles.top_trading_cycles(inst)
    assert oracles.blocking_coalition(inst, allocation) is None

@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(1, 5), st.integers(0, 5), st.floats(0, 1))
def test_conjunctive_engines_agree(seed, n, m, density):
    comp, _params = generate.generate('conjunctive', seed, n=n, m=m, density=density)
    adapter = conjunctive.conjunctive_adapter(comp)
    report = oracles.brute_force_detect(adapter, adapter.poset)
    for run in (engines.detect_llp, engines.detect_by_rejection, engines.detect_bidirectional):
        outcome = run(adapter, adapter.poset)
        assert outcome.found == report.found
        if outcome.found:
            assert outcome.state in report.satisfying_states
            if run is not engines.detect_bidirectional:
                assert outcome.state == report.least
            else:
                distances = oracles.frontier_distances(report, adapter.poset)
                assert outcome.rounds <= 1 + min(distances)
        if run is engines.detect_by_rejection:
            # one node per local state, m + 1 of them per process
            assert outcome.squarings <= math.ceil(math.log2(n * (m + 1))) + 1

@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(1, 8), st.floats(0, 1))
def test_graph_engines_agree(seed, vertices, density):
    digraph, _params = generate.generate('closure', seed, vertices=vertices, density=density)
    expected = oracles.floyd_warshall_closure(digraph)

    closure = graphs.closure_adapter(digraph)
    for run in (engines.detect_llp, engines.detect_by_rejection):
        outcome = run(closure, closure.poset)
        assert closure.matrix(outcome.state) == expected

    reach = graphs.reachability_adapter(digraph)
    row = [v for v in range(vertices) if expected[digraph.source][v]]
    for run in (engines.detect_llp, engines.detect_by_rejection):
        outcome = run(reach, reach.poset)
        assert [v for v, bit in enumerate(outcome.state) if bit] == row

@pytest.mark.parametrize('seed', range(3))
def test_closure_of_large_digraphs(seed):
    digraph, _params = generate.generate('closure', seed, vertices=32, density=0.05)
    expected = oracles.floyd_warshall_closure(digraph)
    for run in (engines.detect_llp, engines.detect_by_rejection):
        adapter = graphs.closure_adapter(digraph)
        outcome = run(adapter, adapter.poset)
        assert adapter.matrix(outcome.state) == expected

@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(1, 20), max_size=8))
def test_subset_sum_reduction(x):
    comp = oracles.build_subset_sum_computation(x)
    for k in range(-1, sum(x) + 2):
        outcome = conjunctive.level_k_conjunctive_detect(comp, k)
        assert outcome.found == oracles.subset_sum_dp(x, k)
        if outcome.found:
            assert comp.weighted_level(outcome.state) == k

@settings(max_examples=50, deadline=None)
@given(seeds, st.integers(1, 4))
def test_equilevel_predicates(seed, size):
    # every satisfying state of these predicates sits at one level
    inst, _params = generate.generate('matching', seed, n=size, m=size)
    adapter = matching.matching_adapter(inst)
    assert oracles.brute_force_detect(adapter, adapter.poset).equilevel

    vset, _params = generate.generate('basis', seed, n=size + 1, m=size)
    adapter = basis.basis_adapter(vset)
    assert oracles.brute_force_detect(adapter, adapter.poset).equilevel

    graph, _params = generate.generate('mst', seed, vertices=size + 1, density=0.5)
    adapter = spanning.spanning_tree_adapter(graph)
    assert oracles.brute_force_detect(adapter, adapter.poset).equilevel

@settings(max_examples=50, deadline=None)
@given(seeds, st.integers(1, 4))
def test_solitary_predicates(seed, size):
    graph, _params = generate.generate(
        'mst', seed, vertices=size + 1, density=0.5, unique_weights=True
    )
    adapter = spanning.unique_mst_adapter(graph)
    assert oracles.brute_force_detect(adapter, adapter.poset).solitary

    inst, _params = generate.generate('housing', seed, n=size)
    adapter = housing.housing_adapter(inst)
    report = oracles.brute_force_detect(adapter, adapter.poset)
    assert report.solitary
    assert report.found

    digraph, _params = generate.generate('closure', seed, vertices=min(size, 3), density=0.4)
    adapter = graphs.closure_adapter(digraph)
    report = oracles.brute_force_detect(adapter, adapter.poset)
    assert report.solitary
    assert report.found

    digraph, _params = generate.generate('reach', seed, vertices=size + 2)
    adapter = graphs.reachability_adapter(digraph)
    assert oracles.brute_force_detect(adapter, adapter.poset).solitary

@settings(max_examples=30, deadline=None)
@given(seeds)
def test_verify_path_certifies_every_engine(seed):
    for kind in ('marriage', 'housing', 'reach', 'conjunctive'):
        inst, params = generate.generate(kind, seed, n=3, vertices=4, m=2)
        for name in core.KINDS[kind].engines:
            outcome, _adapter = core.detect(kind, inst, params, name)
            assert core.certify(kind, inst, params, name, outcome) == []
