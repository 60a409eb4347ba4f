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

"""The housing market core as a lattice-linear predicate.

Agent ``i`` owns house ``i`` and proposes down its preference list; chain
``i`` at position ``p`` points at ``pref[i][p]``. Cycles of the pointer
graph are submatchings: once formed they never break, and an agent pointing
into a cycle it is not part of must move on.
"""

import dataclasses

from equilevel import engines
from equilevel import lattice

@dataclasses.dataclass(frozen=True)
class HousingInstance:
    n: int
    pref: tuple

    def __post_init__(self):
        if self.n < 1:
            raise lattice.InvalidInputError("housing needs at least one agent")
        pref = tuple(tuple(int(h) for h in row) for row in self.pref)
        if len(pref) != self.n:
            raise lattice.InvalidInputError("preference table has wrong size")
        for row in pref:
            if sorted(row) != list(range(self.n)):
                raise lattice.InvalidInputError("pref row is not a permutation", row)
        object.__setattr__(self, 'pref', pref)

def _cycle_members(successor):
    """Returns the set of nodes lying on a cycle of a functional graph.
    """
    on_cycle = set()
    colour = [0] * len(successor)
    for start in range(len(successor)):
        path = []
        x = start
        while colour[x] == 0:
            colour[x] = 1
            path.append(x)
            x = successor[x]
        if colour[x] == 1:
            on_cycle.update(path[path.index(x):])
        for y in path:
            colour[y] = 2
    return on_cycle

class HousingAdapter(engines.PredicateAdapter):

    def __init__(self, inst):
        super().__init__(lattice.ChainPoset([inst.n - 1] * inst.n))
        self.instance = inst

    def pointers(self, state):
        """The functional graph agent -> owner of the house it points at.
        """
        return [self.instance.pref[i][p] for i, p in enumerate(state)]

    def forbidden(self, i, state):
        successor = self.pointers(state)
        on_cycle = _cycle_members(successor)
        return i not in on_cycle and successor[i] in on_cycle

    def _reaches(self, state, src, dst):
        pref = self.instance.pref
        seen = {src}
        stack = [src]
        while stack:
            x = stack.pop()
            if x == dst:
                return True
            for h in pref[x][:state[x] + 1]:
                if h not in seen:
                    seen.add(h)
                    stack.append(h)
        return False

    def evaluate(self, state):
        successor = self.pointers(state)
        if len(set(successor)) != len(successor):
            return False
        # a passed-over house must not lead back to the agent that passed it
        for i, p in enumerate(state):
            for h in self.instance.pref[i][:p]:
                if self._reaches(state, h, i):
                    return False
        return True

    def allocation(self, state):
        return self.pointers(state)

def housing_adapter(inst):
    return HousingAdapter(inst)
