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

"""Generic detection engines.

Every engine walks the lattice of a ``ChainPoset`` under the direction of a
``PredicateAdapter``. Parallel loops are run as supersteps: hooks are
evaluated against an immutable snapshot of the current state, the resulting
advances are applied as one batch, and the next superstep starts from the
batch result.
"""

# Engines raise AdapterContractError when an adapter breaks the property it
# claims, and MissingCapabilityError when it lacks a hook altogether. Running
# off the end of a chain where the algorithm allows it is a NotFound, not an
# error.

import abc
import dataclasses
import math
import threading

from collections import deque
from enum import Enum

import numpy as np

from equilevel import lattice
from equilevel.lattice import GlobalState

class AdapterContractError(lattice.LatticeError):
    """Raised when an adapter violates the property an engine relies on.
    """
    pass

class MissingCapabilityError(lattice.LatticeError, LookupError):
    """Raised when an engine needs a hook the adapter does not provide.
    """
    pass

class Capability(Enum):
    """Hooks an adapter may support, beyond ``evaluate``.

    The value is the name of the adapter method implementing the hook.
    """
    HELPFUL = 'helpful_set'
    INDEPENDENT = 'independent_set'
    FORBIDDEN = 'forbidden'
    DUAL_FORBIDDEN = 'dual_forbidden'
    REJECTION = 'rejection_graph'

class Status(Enum):
    FOUND = 'found'
    NOT_FOUND = 'not-found'

@dataclasses.dataclass(frozen=True)
class DetectionOutcome:
    """The result of one detection run.

    Attributes:
        status (Status): Found or NotFound.
        state (GlobalState): The satisfying state, when found.
        rounds (int): Supersteps executed.
        advancements (int): Total single-index moves (advances and retreats).
        engine (str): Name of the engine that produced this outcome.
        squarings (int): Boolean matrix squarings (rejection engine only).
    """
    status: Status
    state: GlobalState = None
    rounds: int = 0
    advancements: int = 0
    engine: str = ''
    squarings: int = 0

    @property
    def found(self):
        return self.status is Status.FOUND

@dataclasses.dataclass(frozen=True)
class RejectionGraph:
    """A rejection relation over local states.

    Local states are ``(chain, position)`` pairs. An edge ``(s, t)`` means
    eliminating every state up to ``s`` on its chain forces eliminating
    every state up to ``t`` on its chain.

    Attributes:
        nodes (tuple): All local states, in chain then position order.
        edges (frozenset): Directed ``(s, t)`` pairs.
        seeds (frozenset): States forbidden at the bottom element.
    """
    nodes: tuple
    edges: frozenset
    seeds: frozenset

    @classmethod
    def for_poset(cls, poset, edges, seeds):
        nodes = tuple(
            (i, j) for i, h in enumerate(poset.heights) for j in range(h + 1)
        )
        return cls(nodes, frozenset(edges), frozenset(seeds))

class PredicateAdapter(abc.ABC):
    """A problem instance seen as a predicate on a lattice.

    Subclasses implement ``evaluate`` and any subset of the hooks named by
    ``Capability``. Hooks must be pure functions of their arguments during a
    superstep; per-run incremental state may only change in ``advanced``,
    which engines call between supersteps.

    Attributes:
        poset (ChainPoset): The poset whose ideals form the lattice.
        online (bool): Whether hooks only read the instance up to their
            argument plus each chain's next event. Adapters offering a
            rejection graph read all of it and are offline.
    """

    online = True

    def __init__(self, poset):
        self.poset = poset

    @abc.abstractmethod
    def evaluate(self, state):
        """Returns whether the predicate holds on ``state``.
        """
        pass

    def get_supported_capabilities(self):
        """Returns the set of hooks this adapter overrides.

        Returns:
            set of Capability: Supported hooks.
        """
        return {
            cap for cap in Capability
            if getattr(type(self), cap.value) is not getattr(PredicateAdapter, cap.value)
        }

    def helpful_set(self, state):
        """Returns chain indices on which advancing keeps a satisfying
        state reachable.
        """
        raise MissingCapabilityError(Capability.HELPFUL)

    def independent_set(self, state):
        """Returns chain indices that may all be advanced together.
        """
        raise MissingCapabilityError(Capability.INDEPENDENT)

    def forbidden(self, index, state):
        """Returns whether no satisfying state above ``state`` keeps chain
        ``index`` where it is.
        """
        raise MissingCapabilityError(Capability.FORBIDDEN)

    def dual_forbidden(self, index, state):
        """Returns whether no satisfying state below ``state`` keeps chain
        ``index`` where it is.
        """
        raise MissingCapabilityError(Capability.DUAL_FORBIDDEN)

    def rejection_graph(self):
        raise MissingCapabilityError(Capability.REJECTION)

    def reset(self):
        """Drops any per-run state. Called when a run starts.
        """
        pass

    def advanced(self, state, indices):
        """Called after the engine moved to ``state`` by advancing
        ``indices``.
        """
        pass

    def forbidden_set(self, state, pool=None):
        pool = pool or WorkerPool(0)
        return pool.select(lambda i: self.forbidden(i, state), range(self.poset.n))

    def dual_forbidden_set(self, state, pool=None):
        pool = pool or WorkerPool(0)
        return pool.select(lambda i: self.dual_forbidden(i, state), range(self.poset.n))

class WorkerPool:
    """Evaluates per-index hooks on a fixed number of threads.

    Worker ``t`` handles the indices at offsets ``t, t + workers, ...``.

    Args:
        workers (int): Thread count. 0 or 1 runs in the calling thread.
    """

    def __init__(self, workers=0):
        if workers < 0:
            raise lattice.InvalidInputError("negative worker count", workers)
        self.workers = workers

    def select(self, predicate, indices):
        """Returns the sorted indices for which ``predicate`` holds.
        """
        indices = list(indices)
        n_threads = min(self.workers, len(indices))
        if n_threads <= 1:
            return sorted(i for i in indices if predicate(i))
        results = [None] * n_threads
        errors = [None] * n_threads

        def run_thread(t):
            try:
                results[t] = [i for i in indices[t::n_threads] if predicate(i)]
            except BaseException as exc:
                errors[t] = exc

        threads = []
        for t in range(n_threads):
            thread = threading.Thread(
                target=run_thread, args=(t,), name="equilevel-superstep-{}".format(t)
            )
            thread.start()
            threads.append(thread)
        for thread in threads:
            thread.join()
        for exc in errors:
            if exc is not None:
                raise exc
        return sorted(i for part in results for i in part)

def _require(adapter, *caps):
    missing = set(caps) - adapter.get_supported_capabilities()
    if missing:
        raise MissingCapabilityError(
            "adapter lacks required hooks", sorted(c.value for c in missing)
        )

def _notify(observer, engine, rounds, state, indices):
    if observer is not None:
        observer(engine, rounds, state, tuple(indices))

def detect_helpful(adapter, poset, *, observer=None, **_):
    """Walks up from the bottom, advancing one helpful index per step.

    The least index of ``helpful_set`` is advanced, so runs are
    deterministic.

    Args:
        adapter (PredicateAdapter): Provides ``evaluate`` and
            ``helpful_set``.
        poset (ChainPoset): The lattice generator.
        observer (callable, optional): Called after every step.

    Returns:
        DetectionOutcome: Found with the first satisfying state met, or
        NotFound when the top is reached unsatisfied.

    Raises:
        AdapterContractError: If ``helpful_set`` is empty below the top, or
            names a chain that cannot advance.
    """
    _require(adapter, Capability.HELPFUL)
    adapter.reset()
    g = poset.bottom()
    steps = 0
    while not adapter.evaluate(g):
        if poset.is_top(g):
            return DetectionOutcome(Status.NOT_FOUND, None, steps, steps, 'helpful')
        helpful = adapter.helpful_set(g)
        if not helpful:
            raise AdapterContractError("empty helpful set below the top", g)
        idx = min(helpful)
        try:
            g = lattice.advance(poset, g, idx)
        except lattice.AtTopError as exc:
            raise AdapterContractError("helpful index cannot advance", idx, g) from exc
        if not lattice.is_ideal(poset, g):
            raise AdapterContractError("helpful advance left the lattice", idx, g)
        adapter.advanced(g, (idx,))
        steps += 1
        _notify(observer, 'helpful', steps, g, (idx,))
    return DetectionOutcome(Status.FOUND, g, steps, steps, 'helpful')

def detect_independently_helpful(adapter, poset, *, observer=None, **_):
    """Advances every index of ``independent_set`` per superstep.

    Raises:
        AdapterContractError: If ``independent_set`` is empty below the top,
            or a batch leaves the lattice.
    """
    _require(adapter, Capability.INDEPENDENT)
    adapter.reset()
    g = poset.bottom()
    rounds = 0
    advancements = 0
    while not adapter.evaluate(g):
        if poset.is_top(g):
            return DetectionOutcome(Status.NOT_FOUND, None, rounds, advancements, 'independent')
        batch = sorted(set(adapter.independent_set(g)))
        if not batch:
            raise AdapterContractError("empty independent set below the top", g)
        try:
            g = lattice.advance_many(poset, g, batch)
        except lattice.AtTopError as exc:
            raise AdapterContractError("independent batch ran past a top", batch, g) from exc
        if not lattice.is_ideal(poset, g):
            raise AdapterContractError("independent batch left the lattice", batch, g)
        adapter.advanced(g, batch)
        rounds += 1
        advancements += len(batch)
        _notify(observer, 'independent', rounds, g, batch)
    return DetectionOutcome(Status.FOUND, g, rounds, advancements, 'independent')

def detect_llp(adapter, poset, *, workers=0, observer=None, **_):
    """Advances every forbidden index per superstep, from the bottom.

    Intermediate states need not be ideals; the predicate itself decides
    consistency. The first satisfying state met is the least one.

    Returns:
        DetectionOutcome: Found with the least satisfying state, or
        NotFound as soon as a forbidden index cannot advance.

    Raises:
        AdapterContractError: If no index is forbidden on an unsatisfied
            state.
    """
    _require(adapter, Capability.FORBIDDEN)
    adapter.reset()
    pool = WorkerPool(workers)
    g = poset.bottom()
    rounds = 0
    advancements = 0
    while not adapter.evaluate(g):
        forbidden = adapter.forbidden_set(g, pool)
        if not forbidden:
            raise AdapterContractError("no forbidden index on unsatisfied state", g)
        if any(g[i] >= poset.heights[i] for i in forbidden):
            return DetectionOutcome(Status.NOT_FOUND, None, rounds, advancements, 'llp')
        g = lattice.advance_many(poset, g, forbidden)
        adapter.advanced(g, forbidden)
        rounds += 1
        advancements += len(forbidden)
        _notify(observer, 'llp', rounds, g, forbidden)
    return DetectionOutcome(Status.FOUND, g, rounds, advancements, 'llp')

def detect_bidirectional(adapter, poset, *, workers=0, observer=None, **_):
    """Searches up from the bottom and down from the top at once.

    Each round runs one forward superstep on ``g`` and one backward
    superstep on ``z``. The satisfying set must be closed under meet and
    join, so ``g`` stays below the least satisfying state and ``z`` above
    the greatest; once ``g`` is no longer below ``z`` nothing satisfies.

    Returns:
        DetectionOutcome: Found with ``g`` if it satisfies, else ``z``.
    """
    _require(adapter, Capability.FORBIDDEN, Capability.DUAL_FORBIDDEN)
    adapter.reset()
    pool = WorkerPool(workers)
    g = poset.bottom()
    z = poset.top()
    rounds = 0
    advancements = 0

    def outcome(status, state=None):
        return DetectionOutcome(status, state, rounds, advancements, 'bidirectional')

    while True:
        if adapter.evaluate(g):
            return outcome(Status.FOUND, g)
        if adapter.evaluate(z):
            return outcome(Status.FOUND, z)
        if not g.is_below(z):
            return outcome(Status.NOT_FOUND)
        forbidden = adapter.forbidden_set(g, pool)
        if not forbidden:
            raise AdapterContractError("no forbidden index on unsatisfied state", g)
        if any(g[i] >= poset.heights[i] for i in forbidden):
            return outcome(Status.NOT_FOUND)
        dual = adapter.dual_forbidden_set(z, pool)
        if not dual:
            raise AdapterContractError("no dual-forbidden index on unsatisfied state", z)
        if any(z[i] <= 0 for i in dual):
            return outcome(Status.NOT_FOUND)
        g = lattice.advance_many(poset, g, forbidden)
        z = lattice.retreat_many(poset, z, dual)
        rounds += 1
        advancements += len(forbidden) + len(dual)
        _notify(observer, 'bidirectional', rounds, g, forbidden)
        _notify(observer, 'bidirectional', rounds, z, dual)

def _adjacency(vertex_count, edges):
    adj = [[] for _ in range(vertex_count)]
    for idx, (u, v, _w) in enumerate(edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    return adj

def lighter_path_exists(adjacency, u, v, limit):
    """Returns whether ``u`` reaches ``v`` using only edges numbered below
    ``limit``.
    """
    if u == v:
        return True
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y, idx in adjacency[x]:
            if idx >= limit or y in seen:
                continue
            if y == v:
                return True
            seen.add(y)
            queue.append(y)
    return False

def check_sorted_unique(edges):
    """Raises unless edge weights are strictly increasing.
    """
    for a, b in zip(edges, edges[1:]):
        if a[2] == b[2]:
            raise lattice.InvalidInputError("duplicate edge weight", a[2])
        if a[2] > b[2]:
            raise lattice.InvalidInputError("edges not sorted by weight", a, b)

def detect_parallel_mst_unique(edges, vertex_count, *, workers=0, observer=None, **_):
    """Selects the unique minimum spanning forest in one superstep.

    Edge ``j`` is selected iff its endpoints are not joined by a path of
    edges ``0..j-1``. Every edge is tested independently against the same
    (empty) snapshot.

    Args:
        edges (list of (u, v, weight)): Sorted by strictly increasing weight.
        vertex_count (int): Number of vertices.

    Returns:
        tuple of int: One bit per edge.

    Raises:
        InvalidInputError: If weights repeat or are out of order.
    """
    edges = [tuple(e) for e in edges]
    check_sorted_unique(edges)
    for u, v, _w in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count) or u == v:
            raise lattice.InvalidInputError("bad edge endpoints", (u, v))
    adj = _adjacency(vertex_count, edges)
    pool = WorkerPool(workers)
    selected = pool.select(
        lambda j: not lighter_path_exists(adj, edges[j][0], edges[j][1], j),
        range(len(edges)),
    )
    chosen = set(selected)
    bits = tuple(1 if j in chosen else 0 for j in range(len(edges)))
    _notify(observer, 'parallel-mst', 1, GlobalState(bits), selected)
    return bits

def close_relation(matrix):
    """Reflexive-transitive closure of a square boolean matrix by repeated
    squaring.

    Returns:
        (numpy.ndarray, int): The closure and the number of squarings done.
    """
    size = matrix.shape[0]
    closure = matrix.astype(bool) | np.eye(size, dtype=bool)
    squarings = 0
    limit = math.ceil(math.log2(size)) if size > 1 else 0
    while squarings < limit:
        # path counts stay far below 2**24, so float32 products are exact
        dense = closure.astype(np.float32)
        nxt = (dense @ dense) > 0
        squarings += 1
        if np.array_equal(nxt, closure):
            break
        closure = nxt
    return closure, squarings

def detect_by_rejection(adapter, poset, *, observer=None, **_):
    """Offline detection from the closure of a rejection relation.

    Every local state reachable from a seed, and everything below it on its
    chain, is invalid. The least valid position on each chain gives the
    result.

    Raises:
        InvalidInputError: If the rejection graph does not fit ``poset``.
        AdapterContractError: If the computed state does not satisfy the
            predicate.
    """
    _require(adapter, Capability.REJECTION)
    adapter.reset()
    graph = adapter.rejection_graph()
    expected = RejectionGraph.for_poset(poset, (), ()).nodes
    if tuple(graph.nodes) != expected:
        raise lattice.InvalidInputError("rejection graph does not match poset")
    index = {node: k for k, node in enumerate(expected)}
    size = len(expected)
    relation = np.zeros((size, size), dtype=bool)
    for s, t in graph.edges:
        if s not in index or t not in index:
            raise lattice.InvalidInputError("rejection edge names unknown state", (s, t))
        relation[index[s], index[t]] = True
    # rejection is downward closed along each chain
    for i, j in expected:
        if j > 0:
            relation[index[(i, j)], index[(i, j - 1)]] = True
    seeds = np.zeros(size, dtype=bool)
    for seed in graph.seeds:
        if seed not in index:
            raise lattice.InvalidInputError("seed names unknown state", seed)
        seeds[index[seed]] = True
    # a state nothing points at can only be invalid as a seed
    keep = relation.any(axis=0) | seeds
    closure, squarings = close_relation(relation[np.ix_(keep, keep)])
    invalid = np.zeros(size, dtype=bool)
    seed_rows = seeds[keep]
    if seed_rows.any():
        invalid[keep] = closure[seed_rows].any(axis=0)
    g = []
    for i, h in enumerate(poset.heights):
        valid = [j for j in range(h + 1) if not invalid[index[(i, j)]]]
        if not valid:
            return DetectionOutcome(Status.NOT_FOUND, None, 1, 0, 'rejection', squarings)
        g.append(valid[0])
    g = GlobalState(g)
    _notify(observer, 'rejection', 1, g, [i for i, v in enumerate(g) if v])
    if not adapter.evaluate(g):
        raise AdapterContractError("rejection result does not satisfy the predicate", g)
    return DetectionOutcome(Status.FOUND, g, 1, g.level, 'rejection', squarings)

ENGINES = {
    'helpful': detect_helpful,
    'independent': detect_independently_helpful,
    'llp': detect_llp,
    'bidirectional': detect_bidirectional,
    'rejection': detect_by_rejection,
}
