# This file is part of Equilevel - predicate detection on distributive lattices
# Copyright (C) 2026  Equilevel contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""Core logic of equilevel: which engines and oracles apply to which kind.

``detect`` runs one engine on one instance. ``certify`` checks an outcome
against the exhaustive scan and the kind's reference oracle, and returns
the list of disagreements.
"""

import dataclasses

from equilevel import engines
from equilevel import lattice
from equilevel import oracles
from equilevel.lattice import GlobalState
from equilevel.problems import basis
from equilevel.problems import conjunctive
from equilevel.problems import graphs
from equilevel.problems import housing
from equilevel.problems import marriage
from equilevel.problems import matching
from equilevel.problems import spanning

ENGINE_ALIASES = {'boruvka': 'independent'}

# engines whose result must be the least satisfying state
_LEAST = {'llp', 'rejection'}

def _mst_exact(graph):
    weights = [w for _u, _v, w in graph.edges]
    if len(set(weights)) == len(weights):
        return spanning.unique_mst_adapter(graph)
    return spanning.spanning_tree_adapter(graph)

@dataclasses.dataclass(frozen=True)
class Kind:
    """A problem kind.

    Attributes:
        name (str): The kind, as written in problem files.
        adapters (dict): Engine name to adapter factory. ``brute-force``
            names the adapter whose predicate is scanned exhaustively.
        default_engine (str): Engine used when none is given.
        indexing (str): How states are shown, ``0-based`` or ``1-based``.
        vertices (callable): The instance's vertex count, for the vertex
            budget.
        extra (callable): ``(instance, adapter, state) -> dict`` of
            per-kind result fields.
        check (callable): ``(instance, params, engine, adapter, state) ->
            list of str``, the reference oracle's objections.
        pick (callable): ``(adapter, states) -> state``, the brute-force
            answer when the satisfying states have no least one. Defaults
            to the first in lexicographic order.
    """
    name: str
    adapters: dict
    default_engine: str
    indexing: str = '0-based'
    vertices: object = None
    extra: object = None
    check: object = None
    pick: object = None

    @property
    def engines(self):
        return sorted(self.adapters)

# --- per-kind results and checks ---------------------------------------

def _matching_extra(inst, adapter, state):
    return {'pairs': [list(p) for p in adapter.matched_pairs(state)]}

def _matching_check(inst, params, engine, adapter, state):
    best = oracles.max_matching(inst)
    if state.level != best:
        return ["matched set has size {}, maximum matching has {}".format(state.level, best)]
    return []

def _mst_extra(graph, adapter, state):
    return {
        'edges': adapter.edge_indices(state),
        'weight': adapter.weight(state),
    }

def _mst_check(graph, params, engine, adapter, state):
    chosen = adapter.edge_indices(state)
    expected = graph.vertex_count - graph.component_count()
    if len(chosen) != expected:
        return ["{} edges chosen, a spanning forest has {}".format(len(chosen), expected)]
    _edges, weight = oracles.kruskal_mst(graph)
    got = sum(graph.edges[j][2] for j in chosen)
    if got != weight:
        return ["weight {} differs from Kruskal's {}".format(got, weight)]
    return []

def _basis_extra(vset, adapter, state):
    return {'vectors': [j for j, bit in enumerate(state) if bit and j < len(vset.vectors)]}

def _basis_check(vset, params, engine, adapter, state):
    rank = oracles.matrix_rank(vset.vectors)
    if state.level != rank:
        return ["basis of size {}, rank is {}".format(state.level, rank)]
    return []

def _marriage_extra(inst, adapter, state):
    return {'wives': adapter.assignment(state)}

def _marriage_check(inst, params, engine, adapter, state):
    wives = adapter.assignment(state)
    issues = ["blocking pair {}".format(p) for p in oracles.blocking_pairs(inst, wives)]
    if engine in _LEAST and wives != oracles.gale_shapley(inst):
        issues.append("not the man-optimal matching {}".format(oracles.gale_shapley(inst)))
    return issues

def _housing_extra(inst, adapter, state):
    return {'houses': adapter.allocation(state)}

def _housing_check(inst, params, engine, adapter, state):
    houses = adapter.allocation(state)
    expected = oracles.top_trading_cycles(inst)
    if houses != expected:
        return ["allocation {} differs from top trading cycles {}".format(houses, expected)]
    return []

def _levelk_extra(comp, adapter, state):
    return {'weighted_level': comp.weighted_level(state)}

def _levelk_check(comp, params, engine, adapter, state):
    k = params.get('k', 0)
    issues = []
    if comp.weighted_level(state) != k:
        issues.append("cut has weighted level {}, not {}".format(comp.weighted_level(state), k))
    if not adapter.evaluate(state):
        issues.append("cut is inconsistent or falsifies a local predicate")
    return issues

def _reach_extra(d, adapter, state):
    return {'reachable': [v for v, bit in enumerate(state) if bit]}

def _reach_check(d, params, engine, adapter, state):
    row = oracles.floyd_warshall_closure(d)[d.source]
    expected = [v for v in range(d.vertex_count) if row[v]]
    got = [v for v, bit in enumerate(state) if bit]
    if got != expected:
        return ["reachable set {} differs from {}".format(got, expected)]
    return []

def _closure_extra(d, adapter, state):
    return {'matrix': [[int(b) for b in row] for row in adapter.matrix(state)]}

def _closure_check(d, params, engine, adapter, state):
    if adapter.matrix(state) != oracles.floyd_warshall_closure(d):
        return ["closure differs from Floyd-Warshall"]
    return []

KINDS = {
    'matching': Kind(
        'matching', {
            'helpful': matching.matching_adapter,
            'brute-force': matching.matching_adapter,
        }, 'helpful',
        vertices=lambda i: i.left_count + i.right_count,
        extra=_matching_extra, check=_matching_check,
    ),
    'mst': Kind(
        'mst', {
            'helpful': spanning.spanning_tree_adapter,
            'independent': spanning.boruvka_adapter,
            'llp': spanning.unique_mst_adapter,
            'parallel-mst': spanning.unique_mst_adapter,
            'brute-force': _mst_exact,
        }, 'independent',
        vertices=lambda g: g.vertex_count,
        extra=_mst_extra, check=_mst_check,
        pick=lambda adapter, states: min(states, key=adapter.weight),
    ),
    'basis': Kind(
        'basis', {
            'helpful': basis.basis_adapter,
            'brute-force': basis.basis_adapter,
        }, 'helpful',
        extra=_basis_extra, check=_basis_check,
    ),
    'marriage': Kind(
        'marriage', {
            'llp': marriage.stable_marriage_adapter,
            'bidirectional': marriage.stable_marriage_adapter,
            'brute-force': marriage.stable_marriage_adapter,
        }, 'llp', '1-based',
        vertices=lambda i: 2 * i.n,
        extra=_marriage_extra, check=_marriage_check,
    ),
    'housing': Kind(
        'housing', {
            'llp': housing.housing_adapter,
            'brute-force': housing.housing_adapter,
        }, 'llp', '1-based',
        vertices=lambda i: i.n,
        extra=_housing_extra, check=_housing_check,
    ),
    'conjunctive': Kind(
        'conjunctive', {
            'llp': conjunctive.conjunctive_adapter,
            'bidirectional': conjunctive.conjunctive_adapter,
            'rejection': conjunctive.conjunctive_adapter,
            'brute-force': conjunctive.conjunctive_adapter,
        }, 'llp',
    ),
    'levelk': Kind(
        'levelk', {'brute-force': conjunctive.conjunctive_adapter}, 'brute-force',
        extra=_levelk_extra, check=_levelk_check,
    ),
    'subset-sum': Kind(
        'subset-sum', {'brute-force': conjunctive.conjunctive_adapter}, 'brute-force',
        extra=_levelk_extra, check=_levelk_check,
    ),
    'reach': Kind(
        'reach', {
            'llp': graphs.reachability_adapter,
            'rejection': graphs.reachability_adapter,
            'brute-force': graphs.reachability_adapter,
        }, 'llp',
        vertices=lambda d: d.vertex_count,
        extra=_reach_extra, check=_reach_check,
    ),
    'closure': Kind(
        'closure', {
            'llp': graphs.closure_adapter,
            'rejection': graphs.closure_adapter,
            'brute-force': graphs.closure_adapter,
        }, 'rejection',
        vertices=lambda d: d.vertex_count,
        extra=_closure_extra, check=_closure_check,
    ),
}

def resolve_engine(kind, engine):
    """Returns the canonical engine name for ``kind``.

    Raises:
        InvalidInputError: If the engine does not apply to the kind.
    """
    k = KINDS[kind]
    if engine is None:
        return k.default_engine
    engine = ENGINE_ALIASES.get(engine, engine)
    if engine not in k.adapters:
        raise lattice.InvalidInputError(
            "engine {!r} does not apply to {}; try one of: {}".format(
                engine, kind, ', '.join(k.engines))
        )
    return engine

def is_level_search(kind):
    return kind in ('levelk', 'subset-sum')

def detect(kind, instance, params, engine, *, workers=0, observer=None,
           budget=lattice.DEFAULT_BUDGET, adapter=None):
    """Runs ``engine`` on ``instance``.

    Args:
        adapter (PredicateAdapter, optional): Use this adapter instead of
            the kind's own.

    Returns:
        (DetectionOutcome, PredicateAdapter): The outcome, and the adapter
        it was produced with.
    """
    engine = resolve_engine(kind, engine)
    if adapter is None:
        adapter = KINDS[kind].adapters[engine](instance)
    if engine == 'parallel-mst':
        return _detect_parallel_mst(instance, adapter, workers, observer), adapter
    if engine == 'brute-force':
        if is_level_search(kind):
            return conjunctive.level_k_conjunctive_detect(
                instance, params.get('k', 0), budget), adapter
        report = oracles.brute_force_detect(adapter, adapter.poset, budget)
        if not report.found:
            return engines.DetectionOutcome(
                engines.Status.NOT_FOUND, engine='brute-force'), adapter
        state = report.least
        if state is None:
            pick = KINDS[kind].pick
            states = report.satisfying_states
            state = pick(adapter, states) if pick is not None else states[0]
        return engines.DetectionOutcome(
            engines.Status.FOUND, state, 0, 0, 'brute-force'), adapter
    run = engines.ENGINES[engine]
    return run(adapter, adapter.poset, workers=workers, observer=observer), adapter

def _detect_parallel_mst(graph, adapter, workers, observer):
    order = sorted(range(len(graph.edges)), key=lambda j: graph.edges[j][2])
    ranked = [graph.edges[j] for j in order]
    bits = engines.detect_parallel_mst_unique(
        ranked, graph.vertex_count, workers=workers, observer=observer
    )
    state = [0] * adapter.poset.n
    for rank, j in enumerate(order):
        state[j] = bits[rank]
    state = GlobalState(state)
    if not adapter.evaluate(state):
        raise engines.AdapterContractError("parallel selection is not a minimum spanning forest", state)
    return engines.DetectionOutcome(
        engines.Status.FOUND, state, 1, state.level, 'parallel-mst'
    )

def check_budgets(kind, instance, budget_ideals, budget_vertices):
    """Refuses instances too large for the oracles.

    Raises:
        OracleTooLargeError: With the reason.
    """
    k = KINDS[kind]
    if k.vertices is not None and k.vertices(instance) > budget_vertices:
        raise lattice.OracleTooLargeError(
            "instance has {} vertices, budget is {}".format(k.vertices(instance), budget_vertices)
        )
    adapter = k.adapters['brute-force'](instance)
    bound = adapter.poset.ideal_count_bound()
    if bound > budget_ideals:
        raise lattice.OracleTooLargeError(
            "lattice may have {} ideals, budget is {}".format(bound, budget_ideals)
        )

def certify(kind, instance, params, engine, outcome, budget=lattice.DEFAULT_BUDGET):
    """Checks ``outcome`` against the exhaustive scan and the reference
    oracle.

    The scan uses a fresh adapter, so a faulty adapter used for the
    detection cannot vouch for itself.

    Returns:
        list of str: Disagreements; empty if the outcome checks out.
    """
    k = KINDS[kind]
    engine = resolve_engine(kind, engine)
    adapter = k.adapters[engine](instance)
    issues = []
    if is_level_search(kind):
        found = oracles.subset_sum_dp(params['x'], params.get('k', 0)) if 'x' in params else None
        if found is not None and found != outcome.found:
            issues.append("subset-sum table says {}".format('found' if found else 'not found'))
        if outcome.found:
            issues.extend(k.check(instance, params, engine, adapter, outcome.state))
        return issues
    report = oracles.brute_force_detect(adapter, adapter.poset, budget)
    adapter.reset()
    if outcome.found != report.found:
        issues.append("exhaustive scan says {}".format('found' if report.found else 'not found'))
        return issues
    if not outcome.found:
        return issues
    state = outcome.state
    if state not in report.satisfying_states:
        issues.append("state {} does not satisfy the predicate".format(list(state)))
        return issues
    if engine in _LEAST and state != report.least:
        issues.append("state {} is not the least satisfying state {}".format(
            list(state), list(report.least) if report.least else None))
    if k.check is not None:
        issues.extend(k.check(instance, params, engine, adapter, state))
    return issues

def summarize(kind, instance, params, outcome, adapter):
    """Builds the fields of a result document.
    """
    k = KINDS[kind]
    shift = 1 if k.indexing == '1-based' else 0
    result = {
        'kind': kind,
        'engine': outcome.engine,
        'found': outcome.found,
        'indexing': k.indexing,
        'rounds': outcome.rounds,
        'advancements': outcome.advancements,
        'squarings': outcome.squarings,
        'extra': {},
    }
    if outcome.found:
        result['state'] = [v + shift for v in outcome.state]
        result['level'] = outcome.state.level
        if k.extra is not None:
            result['extra'] = k.extra(instance, adapter, outcome.state)
    if is_level_search(kind):
        result['extra']['k'] = params.get('k', 0)
    return result
