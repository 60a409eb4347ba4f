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

"""Minimum vertex cover: equilevel, but with no helpful hook.

Only ``evaluate`` is provided, so the lattice must be scanned.
"""

import dataclasses
import itertools

from equilevel import engines
from equilevel import lattice

@dataclasses.dataclass(frozen=True)
class CoverInstance:
    """An undirected graph; self-loops are allowed and force their vertex
    into every cover.
    """
    vertex_count: int
    edges: tuple
    labels: tuple = None

    def __post_init__(self):
        if self.vertex_count < 1:
            raise lattice.InvalidInputError("a graph needs a vertex")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise lattice.InvalidInputError("edge out of range", (u, v))
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise lattice.InvalidInputError("one label per vertex")
        object.__setattr__(self, 'edges', edges)

    def is_cover(self, members):
        return all(u in members or v in members for u, v in self.edges)

    def label(self, v):
        return self.labels[v] if self.labels is not None else str(v)

class VertexCoverAdapter(engines.PredicateAdapter):

    def __init__(self, graph):
        super().__init__(lattice.ChainPoset([1] * graph.vertex_count))
        self.graph = graph
        self._minimum = next(
            size for size in range(graph.vertex_count + 1)
            if any(
                graph.is_cover(set(c))
                for c in itertools.combinations(range(graph.vertex_count), size)
            )
        )

    def evaluate(self, state):
        members = {v for v, bit in enumerate(state) if bit}
        return len(members) == self._minimum and self.graph.is_cover(members)

def vertex_cover_adapter(graph):
    return VertexCoverAdapter(graph)
