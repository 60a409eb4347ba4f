import random

import pytest

from equilevel import engines
from equilevel import generate
from equilevel import lattice
from equilevel import oracles
from equilevel.lattice import GlobalState
from equilevel.problems import graphs
from equilevel.problems import housing
from equilevel.problems import marriage
from equilevel.problems import matching
from equilevel.problems import spanning

class _Never(engines.PredicateAdapter):
    def evaluate(self, state):
        return False

def test_unsatisfiable_report():
    adapter = _Never(lattice.ChainPoset([1, 2]))
    report = oracles.brute_force_detect(adapter, adapter.poset)
    assert not report.found
    assert report.least is None
    assert report.equilevel and report.solitary
    assert oracles.frontier_distances(report, adapter.poset) is None

def test_brute_force_budget():
    adapter = graphs.closure_adapter(graphs.Digraph(5, [[0] * 5] * 5))
    with pytest.raises(lattice.OracleTooLargeError):
        oracles.brute_force_detect(adapter, adapter.poset)

def test_least_element_predicate():
    inst = marriage.MarriageInstance(
        3, [[0, 1, 2], [0, 2, 1], [1, 2, 0]], [[1, 2, 0], [1, 0, 2], [0, 1, 2]]
    )
    adapter = marriage.stable_marriage_adapter(inst)
    report = oracles.brute_force_detect(adapter, adapter.poset)
    refined = oracles.least_element_predicate(report)
    holding = [g for g in lattice.enumerate_ideals(adapter.poset) if refined(g)]
    assert holding == [GlobalState([0, 1, 0])]
    assert oracles.frontier_distances(report, adapter.poset) == (1, 0)

def test_max_matching():
    assert oracles.max_matching(matching.BipartiteInstance(3, 3, [(0, 0), (1, 0), (2, 2)])) == 2
    assert oracles.max_matching(
        matching.BipartiteInstance(4, 4, [(i, i) for i in range(4)])
    ) == 4
    assert oracles.max_matching(matching.BipartiteInstance(0, 2, [])) == 0

def test_kruskal():
    graph = spanning.WeightedGraph(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])
    assert oracles.kruskal_mst(graph) == (frozenset({0, 1}), 3)
    assert oracles.kruskal_mst(spanning.WeightedGraph(2, [(0, 1, 9)])) == (frozenset({0}), 9)
    assert oracles.kruskal_mst(spanning.WeightedGraph(1, [])) == (frozenset(), 0)

def test_kruskal_against_exhaustive():
    for seed in range(15):
        graph, _params = generate.generate('mst', seed, vertices=6, density=0.6)
        assert oracles.kruskal_mst(graph)[1] == oracles.exhaustive_spanning_weight(graph)

def test_matrix_rank():
    assert oracles.matrix_rank([]) == 0
    assert oracles.matrix_rank([(0, 0), (0, 0)]) == 0
    assert oracles.matrix_rank([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0)]) == 3

def test_gale_shapley_is_man_optimal():
    rng = random.Random(2)
    for _ in range(20):
        n = 4
        inst = marriage.MarriageInstance(
            n,
            [rng.sample(range(n), n) for _ in range(n)],
            [rng.sample(range(n), n) for _ in range(n)],
        )
        best = oracles.gale_shapley(inst)
        stable = oracles.stable_assignments(inst)
        assert best in stable
        pos = inst.position()
        for other in stable:
            assert all(pos[m][best[m]] <= pos[m][other[m]] for m in range(n))

def test_blocking_pairs():
    inst = marriage.MarriageInstance(2, [[0, 1], [0, 1]], [[1, 0], [0, 1]])
    assert oracles.blocking_pairs(inst, [1, 0]) == []
    assert oracles.blocking_pairs(inst, [0, 1]) == [(1, 0)]

def test_top_trading_cycles():
    own = housing.HousingInstance(3, [[0, 1, 2], [1, 0, 2], [2, 1, 0]])
    assert oracles.top_trading_cycles(own) == [0, 1, 2]
    cycle = housing.HousingInstance(3, [[1, 0, 2], [2, 1, 0], [0, 2, 1]])
    assert oracles.top_trading_cycles(cycle) == [1, 2, 0]
    assert oracles.blocking_coalition(cycle, [1, 2, 0]) is None
    assert oracles.blocking_coalition(cycle, [0, 1, 2]) == (0, 1, 2)

def test_top_trading_cycles_is_in_the_core():
    for seed in range(20):
        inst, _params = generate.generate('housing', seed, n=5)
        assert oracles.blocking_coalition(inst, oracles.top_trading_cycles(inst)) is None

def test_floyd_warshall():
    assert oracles.floyd_warshall_closure(graphs.Digraph(2, [[0, 0], [0, 0]])) == [
        [True, False], [False, True],
    ]
    path = graphs.Digraph(3, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert oracles.floyd_warshall_closure(path) == [
        [True, True, True], [False, True, True], [False, False, True],
    ]

def test_subset_sum_dp():
    assert oracles.subset_sum_dp([2, 3, 5], 8)
    assert not oracles.subset_sum_dp([2, 3, 5], 4)
    assert oracles.subset_sum_dp([2, 3, 5], 0)
    assert oracles.subset_sum_dp([], 0)
    assert not oracles.subset_sum_dp([2, 3, 5], -1)
    assert not oracles.subset_sum_dp([2, 3, 5], 11)

def test_subset_sum_reduction():
    from equilevel.problems.conjunctive import level_k_conjunctive_detect
    x = [2, 3, 5]
    comp = oracles.build_subset_sum_computation(x)
    for k in range(11):
        assert level_k_conjunctive_detect(comp, k).found == oracles.subset_sum_dp(x, k)

def test_subset_sum_values_must_be_positive():
    with pytest.raises(lattice.InvalidInputError):
        oracles.build_subset_sum_computation([2, 0])
    with pytest.raises(lattice.InvalidInputError):
        oracles.build_subset_sum_computation([-1])
