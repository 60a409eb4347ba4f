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

"""Spanning trees over the Boolean lattice of edges.

Three adapters share the lattice, one single-event chain per edge:

- ``spanning_tree_adapter``: any spanning forest, one acyclic edge at a time.
  Its chains run lightest edge first, so the least helpful index is the
  lightest acyclic edge and the walk builds a minimum spanning forest.
- ``boruvka_adapter``: every component adds its lightest outgoing edge per
  superstep.
- ``unique_mst_adapter``: with distinct weights, an edge is forced in iff no
  lighter path joins its endpoints.
"""

import dataclasses

from equilevel import engines
from equilevel import lattice

@dataclasses.dataclass(frozen=True)
class WeightedGraph:
    """An undirected simple graph with integer edge weights.

    Attributes:
        vertex_count (int): Vertices are ``0..vertex_count-1``.
        edges (tuple): ``(u, v, weight)`` triples.
        unique_weights (bool): Whether all weights are distinct.
    """
    vertex_count: int
    edges: tuple
    unique_weights: bool = False

    def __post_init__(self):
        if self.vertex_count < 1:
            raise lattice.InvalidInputError("a graph needs a vertex")
        edges = tuple((int(u), int(v), int(w)) for u, v, w in self.edges)
        pairs = set()
        for u, v, _w in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise lattice.InvalidInputError("edge out of range", (u, v))
            if u == v:
                raise lattice.InvalidInputError("self-loop", u)
            key = (min(u, v), max(u, v))
            if key in pairs:
                raise lattice.InvalidInputError("parallel edge", key)
            pairs.add(key)
        weights = [w for _u, _v, w in edges]
        if self.unique_weights and len(set(weights)) != len(weights):
            raise lattice.InvalidInputError("duplicate weights in a unique-weight graph")
        object.__setattr__(self, 'edges', edges)

    def component_count(self):
        ds = DisjointSet(self.vertex_count)
        for u, v, _w in self.edges:
            ds.union(u, v)
        return ds.count

class DisjointSet:
    """Union-find with path halving and union by size.
    """

    def __init__(self, size):
        self.parent = list(range(size))
        self.size = [1] * size
        self.count = size

    def copy(self):
        ds = DisjointSet(0)
        ds.parent = list(self.parent)
        ds.size = list(self.size)
        ds.count = self.count
        return ds

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        """Joins the sets of ``a`` and ``b``. Returns False if they were
        already joined.
        """
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True

class _EdgeLattice(engines.PredicateAdapter):
    """Common base: one Boolean chain per edge, spanning-forest predicate.
    """

    def __init__(self, graph, order=None):
        super().__init__(lattice.ChainPoset([1] * max(len(graph.edges), 1)))
        self.graph = graph
        # chain k holds edge order[k]
        self.order = list(range(len(graph.edges))) if order is None else list(order)
        self._target = graph.vertex_count - graph.component_count()
        self.reset()

    def reset(self):
        self._state = self.poset.bottom()
        self._forest = DisjointSet(self.graph.vertex_count)

    def edge_indices(self, state):
        """Returns the sorted indices of the edges ``state`` chooses.
        """
        return sorted(self.order[k] for k, v in enumerate(state) if v and k < len(self.order))

    def _forest_for(self, state):
        """Returns the union-find of ``state``'s edges, or None if they
        contain a cycle.
        """
        if state == self._state:
            return self._forest
        ds = DisjointSet(self.graph.vertex_count)
        for j in self.edge_indices(state):
            u, v, _w = self.graph.edges[j]
            if not ds.union(u, v):
                return None
        return ds

    def evaluate(self, state):
        if len(self.graph.edges) == 0:
            return state.level == 0
        forest = self._forest_for(state)
        return forest is not None and len(self.edge_indices(state)) == self._target

    def advanced(self, state, indices):
        forest = self._forest.copy()
        for k in indices:
            u, v, _w = self.graph.edges[self.order[k]]
            if not forest.union(u, v):
                self._state = None
                return
        self._state = state
        self._forest = forest

    def weight(self, state):
        return sum(self.graph.edges[j][2] for j in self.edge_indices(state))

class SpanningTreeAdapter(_EdgeLattice):
    """Any edge that closes no cycle with the current edges is helpful.

    Chains are the edges sorted by ``(weight, index)``; use
    ``edge_indices`` to read a state as edges.
    """

    def __init__(self, graph):
        edges = graph.edges
        super().__init__(graph, sorted(range(len(edges)), key=lambda j: (edges[j][2], j)))

    def helpful_set(self, state):
        forest = self._forest_for(state)
        if forest is None:
            return set()
        helpful = set()
        for k, j in enumerate(self.order):
            u, v, _w = self.graph.edges[j]
            if not state[k] and forest.find(u) != forest.find(v):
                helpful.add(k)
        return helpful

class BoruvkaAdapter(_EdgeLattice):
    """Each current component contributes its lightest outgoing edge.

    Requires distinct weights, otherwise two components could pick edges
    closing a cycle between them.
    """

    def __init__(self, graph):
        weights = [w for _u, _v, w in graph.edges]
        if len(set(weights)) != len(weights):
            raise lattice.InvalidInputError("Boruvka needs distinct edge weights")
        super().__init__(graph)

    def independent_set(self, state):
        forest = self._forest_for(state)
        if forest is None:
            return set()
        best = {}
        for j, (u, v, w) in enumerate(self.graph.edges):
            if state[j]:
                continue
            ru, rv = forest.find(u), forest.find(v)
            if ru == rv:
                continue
            for root in (ru, rv):
                if root not in best or w < self.graph.edges[best[root]][2]:
                    best[root] = j
        return set(best.values())

class UniqueMstAdapter(_EdgeLattice):
    """The unique minimum spanning forest as a lattice-linear predicate.

    An edge is forbidden at 0 when it belongs to the forest (no lighter path
    joins its endpoints), and at 1 when it does not. Neither depends on the
    other chains, so an index that is not forbidden stays that way.
    """

    def __init__(self, graph):
        weights = [w for _u, _v, w in graph.edges]
        if len(set(weights)) != len(weights):
            raise lattice.InvalidInputError("unique MST needs distinct edge weights")
        super().__init__(graph)
        order = sorted(range(len(graph.edges)), key=lambda j: graph.edges[j][2])
        ranked = [graph.edges[j] for j in order]
        adj = engines._adjacency(graph.vertex_count, ranked)
        self._in_forest = [False] * len(graph.edges)
        for rank, j in enumerate(order):
            u, v, _w = graph.edges[j]
            self._in_forest[j] = not engines.lighter_path_exists(adj, u, v, rank)

    def forbidden(self, index, state):
        if index >= len(self.graph.edges):
            return False
        return bool(state[index]) != self._in_forest[index]

    def evaluate(self, state):
        # spanning forest plus the cycle condition: every unused edge is
        # the heaviest edge on the cycle it would close
        if not super().evaluate(state):
            return False
        chosen = self.edge_indices(state)
        for j, (u, v, w) in enumerate(self.graph.edges):
            if state[j]:
                continue
            lighter = [self.graph.edges[k] for k in chosen if self.graph.edges[k][2] < w]
            adj = engines._adjacency(self.graph.vertex_count, lighter)
            if not engines.lighter_path_exists(adj, u, v, len(lighter)):
                return False
        return True

def spanning_tree_adapter(graph):
    return SpanningTreeAdapter(graph)

def boruvka_adapter(graph):
    return BoruvkaAdapter(graph)

def unique_mst_adapter(graph):
    return UniqueMstAdapter(graph)
