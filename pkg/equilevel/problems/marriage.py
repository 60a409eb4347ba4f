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

"""Stable marriage as a lattice-linear predicate.

Chain ``j`` is man ``j``'s proposal list: at position ``p`` he proposes to
``mpref[j][p]``. Positions are 0-based here; results are shown 1-based.

Stable matchings are closed under meet and join, so both the forward
(man-optimal) and backward (man-pessimal) frontiers apply.
"""

import dataclasses

from equilevel import engines
from equilevel import lattice

def _is_permutation(row, n):
    return sorted(row) == list(range(n))

@dataclasses.dataclass(frozen=True)
class MarriageInstance:
    """Preferences for ``n`` men and ``n`` women.

    Attributes:
        n (int): Number of men, and of women.
        mpref (tuple): ``mpref[i][k]`` is man ``i``'s ``k``-th choice.
        rank (tuple): ``rank[w][m]`` is woman ``w``'s rank of man ``m``,
            lower is better.
    """
    n: int
    mpref: tuple
    rank: tuple

    def __post_init__(self):
        if self.n < 1:
            raise lattice.InvalidInputError("marriage needs at least one pair")
        mpref = tuple(tuple(int(w) for w in row) for row in self.mpref)
        rank = tuple(tuple(int(r) for r in row) for row in self.rank)
        if len(mpref) != self.n or len(rank) != self.n:
            raise lattice.InvalidInputError("preference table has wrong size")
        for row in mpref:
            if not _is_permutation(row, self.n):
                raise lattice.InvalidInputError("mpref row is not a permutation", row)
        for row in rank:
            if len(row) != self.n or len(set(row)) != self.n:
                raise lattice.InvalidInputError("rank row has ties or wrong size", row)
        object.__setattr__(self, 'mpref', mpref)
        object.__setattr__(self, 'rank', rank)

    def position(self):
        """Returns ``pos`` where ``pos[i][w]`` is the index of ``w`` in
        ``mpref[i]``.
        """
        pos = [[0] * self.n for _ in range(self.n)]
        for i, row in enumerate(self.mpref):
            for k, w in enumerate(row):
                pos[i][w] = k
        return pos

class StableMarriageAdapter(engines.PredicateAdapter):
    """Forbidden men are rejected by their current woman; dual-forbidden men
    are wanted by a woman they already passed over.
    """

    def __init__(self, inst):
        super().__init__(lattice.ChainPoset([inst.n - 1] * inst.n))
        self.instance = inst
        self._pos = inst.position()

    def forbidden(self, j, state):
        inst = self.instance
        z = inst.mpref[j][state[j]]
        for i in range(inst.n):
            if i == j or inst.rank[z][i] >= inst.rank[z][j]:
                continue
            if self._pos[i][z] <= state[i]:
                return True
        return False

    def dual_forbidden(self, j, state):
        inst = self.instance
        for w in inst.mpref[j][:state[j]]:
            if all(
                inst.rank[w][j] < inst.rank[w][i]
                for i in range(inst.n)
                if i != j and self._pos[i][w] <= state[i]
            ):
                return True
        return False

    def evaluate(self, state):
        return not any(self.forbidden(j, state) for j in range(self.instance.n))

    def assignment(self, state):
        """Returns the woman each man is matched to in ``state``.
        """
        return [self.instance.mpref[j][p] for j, p in enumerate(state)]

def stable_marriage_adapter(inst):
    return StableMarriageAdapter(inst)
