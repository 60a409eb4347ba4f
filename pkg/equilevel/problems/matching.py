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

"""Maximum cardinality bipartite matching as an equilevel predicate.

The lattice is the Boolean lattice over the left vertices. A set of left
vertices satisfies the predicate when it can be matched into the right side
and no outside vertex has an alternating path to a free right vertex.
"""

import dataclasses

from equilevel import engines
from equilevel import lattice

@dataclasses.dataclass(frozen=True)
class BipartiteInstance:
    left_count: int
    right_count: int
    edges: tuple

    def __post_init__(self):
        if self.left_count < 0 or self.right_count < 0:
            raise lattice.InvalidInputError("negative vertex count")
        edges = tuple(tuple(e) for e in self.edges)
        for l, r in edges:
            if not (0 <= l < self.left_count and 0 <= r < self.right_count):
                raise lattice.InvalidInputError("edge out of range", (l, r))
        if len(set(edges)) != len(edges):
            raise lattice.InvalidInputError("duplicate edge")
        object.__setattr__(self, 'edges', edges)

    def neighbours(self):
        adj = [[] for _ in range(self.left_count)]
        for l, r in self.edges:
            adj[l].append(r)
        return [sorted(a) for a in adj]

class _Matching:
    """A matching held as two partner maps.
    """

    def __init__(self, adj):
        self.adj = adj
        self.right_of = {}
        self.left_of = {}

    def copy(self):
        m = _Matching(self.adj)
        m.right_of = dict(self.right_of)
        m.left_of = dict(self.left_of)
        return m

    def augmenting_path(self, start, allowed):
        """Finds an alternating path from ``start`` to a free right vertex.

        Left vertices on the path other than ``start`` must be matched, and
        therefore in ``allowed``.

        Returns:
            list of (left, right) pairs to match, or None.
        """
        parent = {}
        stack = [start]
        seen_right = set()
        while stack:
            l = stack.pop()
            for r in self.adj[l]:
                if r in seen_right:
                    continue
                seen_right.add(r)
                parent[r] = l
                owner = self.left_of.get(r)
                if owner is None:
                    path = []
                    while True:
                        pl = parent[r]
                        path.append((pl, r))
                        if pl == start:
                            return path
                        r = self.right_of[pl]
                elif owner in allowed:
                    stack.append(owner)
        return None

    def augment(self, path):
        for l, r in path:
            self.right_of[l] = r
            self.left_of[r] = l

class MatchingAdapter(engines.PredicateAdapter):
    """Boolean lattice over left vertices; helpful vertices extend the
    current matching by an augmenting path.

    The matching for the engine's current state is kept between supersteps
    and extended in ``advanced``; other states get a fresh matching.
    """

    def __init__(self, inst):
        super().__init__(lattice.ChainPoset([1] * max(inst.left_count, 1)))
        self.instance = inst
        self._adj = inst.neighbours() or [[]]
        self.reset()

    def reset(self):
        self._state = self.poset.bottom()
        self._matching = _Matching(self._adj)

    def _members(self, state):
        return {i for i, v in enumerate(state) if v}

    def _matching_for(self, state):
        if state == self._state:
            return self._matching
        members = self._members(state)
        matching = _Matching(self._adj)
        for l in sorted(members):
            path = matching.augmenting_path(l, members)
            if path is not None:
                matching.augment(path)
        return matching

    def helpful_set(self, state):
        matching = self._matching_for(state)
        members = self._members(state)
        return {
            l for l in range(len(self._adj))
            if l not in members and matching.augmenting_path(l, members) is not None
        }

    def evaluate(self, state):
        matching = self._matching_for(state)
        if len(matching.right_of) != len(self._members(state)):
            return False
        return not self.helpful_set(state)

    def advanced(self, state, indices):
        matching = self._matching.copy()
        members = self._members(state)
        for l in indices:
            path = matching.augmenting_path(l, members)
            if path is None:
                break
            matching.augment(path)
        else:
            self._state = state
            self._matching = matching
            return
        # not an augmenting advance; fall back to recomputing on demand
        self._state = None

    def matched_pairs(self, state):
        """Returns the (left, right) pairs of a maximum matching of
        ``state``.
        """
        return sorted(self._matching_for(state).right_of.items())

def matching_adapter(inst):
    return MatchingAdapter(inst)
