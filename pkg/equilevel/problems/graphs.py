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

"""Reachability and transitive closure of a directed graph.

Both predicates live on Boolean lattices and support efficient advancement
as well as efficient rejection: a bit that must be set forces the bits it
points at.
"""

import dataclasses

from collections import deque

from equilevel import engines
from equilevel import lattice

@dataclasses.dataclass(frozen=True)
class Digraph:
    """A directed graph given by its adjacency matrix.

    Attributes:
        vertex_count (int): Number of vertices.
        matrix (tuple): ``matrix[i][j]`` is True for an arc ``i -> j``.
        source (int): Start vertex for reachability.
    """
    vertex_count: int
    matrix: tuple
    source: int = 0

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise lattice.InvalidInputError("a digraph needs a vertex")
        matrix = tuple(tuple(bool(x) for x in row) for row in self.matrix)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise lattice.InvalidInputError("adjacency matrix is not square", n)
        if not 0 <= self.source < n:
            raise lattice.InvalidInputError("source out of range", self.source)
        object.__setattr__(self, 'matrix', matrix)

    def arcs(self):
        return [
            (i, j) for i in range(self.vertex_count)
            for j in range(self.vertex_count) if self.matrix[i][j]
        ]

    def successors(self):
        return [
            [j for j in range(self.vertex_count) if self.matrix[i][j]]
            for i in range(self.vertex_count)
        ]

    def predecessors(self):
        return [
            [i for i in range(self.vertex_count) if self.matrix[i][j]]
            for j in range(self.vertex_count)
        ]

def _reachable(successors, start):
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in successors[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen

class ReachabilityAdapter(engines.PredicateAdapter):
    """One bit per vertex: set once the vertex is known reachable.
    """

    online = False

    def __init__(self, digraph):
        super().__init__(lattice.ChainPoset([1] * digraph.vertex_count))
        self.digraph = digraph
        self._pred = digraph.predecessors()
        self._reach = _reachable(digraph.successors(), digraph.source)

    def forbidden(self, j, state):
        if state[j]:
            return False
        return j == self.digraph.source or any(state[i] for i in self._pred[j])

    def evaluate(self, state):
        return {j for j, v in enumerate(state) if v} == self._reach

    def rejection_graph(self):
        edges = {((i, 0), (j, 0)) for i, j in self.digraph.arcs() if i != j}
        seeds = {(self.digraph.source, 0)}
        return engines.RejectionGraph.for_poset(self.poset, edges, seeds)

class ClosureAdapter(engines.PredicateAdapter):
    """One bit per matrix cell ``(i, j)``, at chain ``i * n + j``.
    """

    online = False

    def __init__(self, digraph):
        n = digraph.vertex_count
        super().__init__(lattice.ChainPoset([1] * (n * n)))
        self.digraph = digraph
        succ = digraph.successors()
        self._closure = {(i, j) for i in range(n) for j in _reachable(succ, i)}

    def cell(self, index):
        return divmod(index, self.digraph.vertex_count)

    def forbidden(self, index, state):
        if state[index]:
            return False
        n = self.digraph.vertex_count
        i, j = self.cell(index)
        if i == j or self.digraph.matrix[i][j]:
            return True
        return any(state[i * n + k] and state[k * n + j] for k in range(n))

    def evaluate(self, state):
        n = self.digraph.vertex_count
        return {(i, j) for i in range(n) for j in range(n) if state[i * n + j]} == self._closure

    def rejection_graph(self):
        n = self.digraph.vertex_count
        seeds = {
            (i * n + j, 0) for i in range(n) for j in range(n)
            if i == j or self.digraph.matrix[i][j]
        }
        edges = {
            ((k * n + i, 0), (k * n + j, 0))
            for k in range(n) for i, j in self.digraph.arcs() if i != j
        }
        return engines.RejectionGraph.for_poset(self.poset, edges, seeds)

    def matrix(self, state):
        n = self.digraph.vertex_count
        return [[bool(state[i * n + j]) for j in range(n)] for i in range(n)]

def reachability_adapter(digraph):
    return ReachabilityAdapter(digraph)

def closure_adapter(digraph):
    return ClosureAdapter(digraph)
