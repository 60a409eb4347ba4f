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

"""A basis of a vector set, over the Boolean lattice of vectors.
"""

import dataclasses

from equilevel import engines
from equilevel import lattice

@dataclasses.dataclass(frozen=True)
class VectorSet:
    dimension: int
    vectors: tuple

    def __post_init__(self):
        if self.dimension < 0:
            raise lattice.InvalidInputError("negative dimension")
        vectors = tuple(tuple(int(x) for x in v) for v in self.vectors)
        for v in vectors:
            if len(v) != self.dimension:
                raise lattice.InvalidInputError("vector of wrong dimension", v)
        object.__setattr__(self, 'vectors', vectors)

def integer_rank(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of the input, so the divisions are
    exact.
    """
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            lead = m[r][col]
            for c in range(col + 1, ncols):
                m[r][c] = (m[r][c] * p - lead * m[rank][c]) // prev
            m[r][col] = 0
        prev = p
        rank += 1
    return rank

class BasisAdapter(engines.PredicateAdapter):
    """Helpful vectors are those outside the span of the chosen ones.
    """

    def __init__(self, vset):
        super().__init__(lattice.ChainPoset([1] * max(len(vset.vectors), 1)))
        self.vectors = vset.vectors
        self._rank = integer_rank(self.vectors)

    def _chosen(self, state):
        return [self.vectors[j] for j, v in enumerate(state) if v and j < len(self.vectors)]

    def helpful_set(self, state):
        chosen = self._chosen(state)
        base = integer_rank(chosen)
        return {
            j for j, v in enumerate(self.vectors)
            if not state[j] and integer_rank(chosen + [v]) > base
        }

    def evaluate(self, state):
        chosen = self._chosen(state)
        return integer_rank(chosen) == len(chosen) == self._rank

def basis_adapter(vset):
    return BasisAdapter(vset)
