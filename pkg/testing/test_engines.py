import threading

import numpy as np
import pytest

from equilevel import engines
from equilevel import lattice
from equilevel import oracles
from equilevel.engines import Capability
from equilevel.lattice import ChainPoset, GlobalState
from equilevel.problems import conjunctive
from equilevel.problems import graphs
from equilevel.problems import marriage
from equilevel.problems import matching
from equilevel.problems import spanning

class _Stuck(engines.PredicateAdapter):
    def evaluate(self, state):
        return False

    def helpful_set(self, state):
        return set()

class _AlwaysForbidden(engines.PredicateAdapter):
    def evaluate(self, state):
        return False

    def forbidden(self, index, state):
        return True

class _NeverForbidden(engines.PredicateAdapter):
    def evaluate(self, state):
        return False

    def forbidden(self, index, state):
        return False

def _path_digraph(n):
    return graphs.Digraph(n, [[j == i + 1 for j in range(n)] for i in range(n)])

def _crossed_matching():
    return matching.BipartiteInstance(3, 3, [(0, 0), (1, 0), (2, 2)])

def test_capabilities():
    m = matching.matching_adapter(_crossed_matching())
    assert m.get_supported_capabilities() == {Capability.HELPFUL}
    inst = marriage.MarriageInstance(2, [[0, 1], [1, 0]], [[0, 1], [1, 0]])
    assert marriage.stable_marriage_adapter(inst).get_supported_capabilities() == {
        Capability.FORBIDDEN, Capability.DUAL_FORBIDDEN,
    }
    comp = conjunctive.Computation(1, ((),), ((True,),))
    assert conjunctive.conjunctive_adapter(comp).get_supported_capabilities() == {
        Capability.FORBIDDEN, Capability.DUAL_FORBIDDEN, Capability.REJECTION,
    }

def test_online_flag():
    assert matching.matching_adapter(_crossed_matching()).online
    graph = spanning.WeightedGraph(3, [(0, 1, 1), (1, 2, 2)])
    assert spanning.spanning_tree_adapter(graph).online
    assert spanning.boruvka_adapter(graph).online
    # a rejection graph needs the whole instance
    comp = conjunctive.Computation(1, ((),), ((True,),))
    assert not conjunctive.conjunctive_adapter(comp).online
    assert not graphs.reachability_adapter(_path_digraph(3)).online
    assert not graphs.closure_adapter(_path_digraph(3)).online

def test_missing_capability():
    adapter = matching.matching_adapter(_crossed_matching())
    with pytest.raises(engines.MissingCapabilityError):
        engines.detect_llp(adapter, adapter.poset)
    with pytest.raises(engines.MissingCapabilityError):
        engines.detect_by_rejection(adapter, adapter.poset)

def test_helpful_crossed_matching():
    adapter = matching.matching_adapter(_crossed_matching())
    outcome = engines.detect_helpful(adapter, adapter.poset)
    assert outcome.found
    assert outcome.state == GlobalState([1, 0, 1])
    assert outcome.state.level == 2
    assert outcome.rounds == 2
    assert outcome.engine == 'helpful'

def test_helpful_two_by_two_matching():
    # only right 1 is free for left 0 in the final matching
    inst = matching.BipartiteInstance(2, 2, [(0, 0), (0, 1), (1, 0)])
    adapter = matching.matching_adapter(inst)
    outcome = engines.detect_helpful(adapter, adapter.poset)
    assert outcome.state == GlobalState([1, 1])
    assert outcome.state.level == 2
    assert oracles.max_matching(inst) == 2

def test_helpful_contract_violation():
    adapter = _Stuck(ChainPoset([1, 1]))
    with pytest.raises(engines.AdapterContractError):
        engines.detect_helpful(adapter, adapter.poset)

def test_llp_not_found_at_top():
    adapter = _AlwaysForbidden(ChainPoset([1, 1]))
    outcome = engines.detect_llp(adapter, adapter.poset)
    assert not outcome.found
    assert outcome.state is None
    assert outcome.rounds == 1
    assert outcome.advancements == 2

def test_llp_contract_violation():
    adapter = _NeverForbidden(ChainPoset([1, 1]))
    with pytest.raises(engines.AdapterContractError):
        engines.detect_llp(adapter, adapter.poset)

def test_llp_path_rounds():
    adapter = graphs.reachability_adapter(_path_digraph(7))
    calls = []
    outcome = engines.detect_llp(
        adapter, adapter.poset, observer=lambda *args: calls.append(args)
    )
    assert outcome.found
    assert outcome.state == GlobalState([1] * 7)
    assert outcome.rounds == 7
    assert len(calls) == 7
    assert calls[0][0] == 'llp'

def test_llp_workers_agree():
    digraph = graphs.Digraph(4, [
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [1, 0, 0, 0],
        [0, 0, 1, 0],
    ])
    a = graphs.closure_adapter(digraph)
    b = graphs.closure_adapter(digraph)
    sequential = engines.detect_llp(a, a.poset)
    threaded = engines.detect_llp(b, b.poset, workers=4)
    assert sequential == threaded

def test_boruvka_path_single_round():
    graph = spanning.WeightedGraph(9, [(i, i + 1, i + 1) for i in range(8)])
    adapter = spanning.boruvka_adapter(graph)
    outcome = engines.detect_independently_helpful(adapter, adapter.poset)
    assert outcome.found
    assert outcome.rounds == 1
    assert outcome.state.level == 8

def test_boruvka_cycle():
    weights = [5, 1, 7, 3, 8, 2, 6, 4]
    graph = spanning.WeightedGraph(8, [(i, (i + 1) % 8, w) for i, w in enumerate(weights)])
    adapter = spanning.boruvka_adapter(graph)
    outcome = engines.detect_independently_helpful(adapter, adapter.poset)
    assert outcome.found
    assert outcome.state.level == 7
    # the heaviest edge closes the cycle
    assert outcome.state[4] == 0
    assert adapter.weight(outcome.state) == sum(weights) - 8
    assert outcome.rounds <= 3

def test_bidirectional_returns_top():
    inst = marriage.MarriageInstance(
        3, [[0, 1, 2], [0, 2, 1], [1, 2, 0]], [[1, 2, 0], [1, 0, 2], [0, 1, 2]]
    )
    adapter = marriage.stable_marriage_adapter(inst)
    outcome = engines.detect_bidirectional(adapter, adapter.poset)
    assert outcome.found
    assert outcome.state == GlobalState([2, 2, 2])
    assert outcome.rounds == 0

def test_bidirectional_not_found():
    comp = conjunctive.Computation(1, (((1,),),), ((False, False),))
    adapter = conjunctive.conjunctive_adapter(comp)
    outcome = engines.detect_bidirectional(adapter, adapter.poset)
    assert not outcome.found
    assert outcome.rounds == 1
    assert not engines.detect_llp(adapter, adapter.poset).found

def test_parallel_mst_triangle():
    edges = [(0, 1, 1), (1, 2, 2), (0, 2, 3)]
    assert engines.detect_parallel_mst_unique(edges, 3) == (1, 1, 0)
    assert engines.detect_parallel_mst_unique(edges, 3, workers=3) == (1, 1, 0)

def test_parallel_mst_disconnected_forest():
    # a triangle and a separate edge: 5 vertices, 2 components
    edges = [(0, 1, 1), (1, 2, 2), (0, 2, 3), (3, 4, 4)]
    bits = engines.detect_parallel_mst_unique(edges, 5)
    assert bits == (1, 1, 0, 1)
    assert sum(bits) == 5 - 2

def test_parallel_mst_rejects_bad_weights():
    with pytest.raises(lattice.InvalidInputError):
        engines.detect_parallel_mst_unique([(0, 1, 2), (1, 2, 1)], 3)
    with pytest.raises(lattice.InvalidInputError):
        engines.detect_parallel_mst_unique([(0, 1, 1), (1, 2, 1)], 3)

def test_close_relation():
    matrix = np.array([
        [0, 1, 0],
        [0, 0, 1],
        [0, 0, 0],
    ], dtype=bool)
    closure, squarings = engines.close_relation(matrix)
    assert np.array_equal(closure, np.triu(np.ones((3, 3), dtype=bool)))
    assert squarings <= 2

def test_rejection_single_arc():
    digraph = graphs.Digraph(2, [[0, 1], [0, 0]])
    adapter = graphs.closure_adapter(digraph)
    outcome = engines.detect_by_rejection(adapter, adapter.poset)
    assert outcome.found
    assert outcome.state == GlobalState([1, 1, 0, 1])
    assert outcome.rounds == 1
    assert adapter.matrix(outcome.state) == [[True, True], [False, True]]

def test_rejection_matches_llp():
    digraph = _path_digraph(5)
    a = graphs.closure_adapter(digraph)
    b = graphs.closure_adapter(digraph)
    assert engines.detect_by_rejection(a, a.poset).state == engines.detect_llp(b, b.poset).state

def test_worker_pool_select():
    indices = range(50)
    wanted = [i for i in indices if i % 3 == 0]
    assert engines.WorkerPool(0).select(lambda i: i % 3 == 0, indices) == wanted
    assert engines.WorkerPool(4).select(lambda i: i % 3 == 0, indices) == wanted

def test_worker_pool_uses_threads():
    names = set()
    lock = threading.Lock()

    def record(i):
        with lock:
            names.add(threading.current_thread().name)
        return True

    engines.WorkerPool(3).select(record, range(9))
    assert all(name.startswith('equilevel-superstep-') for name in names)

def test_worker_pool_propagates_errors():
    def broken(i):
        if i == 3:
            raise ValueError(i)
        return True

    with pytest.raises(ValueError):
        engines.WorkerPool(4).select(broken, range(8))
    with pytest.raises(lattice.InvalidInputError):
        engines.WorkerPool(-1)

def test_engine_registry():
    assert set(engines.ENGINES) == {
        'helpful', 'independent', 'llp', 'bidirectional', 'rejection',
    }
