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

"""Conjunctive predicates over a distributed computation.

A ``Computation`` is a trace of ``n`` processes. Event ``e`` (1-based) of
process ``i`` carries the vector clock ``clocks[i][e-1]``; local predicate
``l_i`` is tabulated per local state ``0..m_i``. The conjunction of the
local predicates over consistent cuts is lattice-linear.
"""

import dataclasses

from equilevel import engines
from equilevel import lattice

@dataclasses.dataclass(frozen=True)
class Computation:
    """A traced computation.

    Attributes:
        process_count (int): Number of processes.
        clocks (tuple): ``clocks[i][e]`` is the vector clock of event
            ``e + 1`` of process ``i``.
        local_predicate (tuple): ``local_predicate[i][j]`` is ``l_i`` at
            state ``j``; one more entry than process ``i`` has events.
        counts (tuple, optional): Event count stored at each local state,
            used for the level of a cut. Defaults to ``j`` at state ``j``.
    """
    process_count: int
    clocks: tuple
    local_predicate: tuple
    counts: tuple = None

    def __post_init__(self):
        n = self.process_count
        if n < 1:
            raise lattice.InvalidInputError("a computation needs a process")
        clocks = tuple(tuple(tuple(int(x) for x in vc) for vc in proc) for proc in self.clocks)
        preds = tuple(tuple(bool(b) for b in row) for row in self.local_predicate)
        if len(clocks) != n or len(preds) != n:
            raise lattice.InvalidInputError("per-process tables have wrong size")
        heights = [len(proc) for proc in clocks]
        for i, proc in enumerate(clocks):
            if len(preds[i]) != heights[i] + 1:
                raise lattice.InvalidInputError("local predicate needs one entry per state", i)
            prev = (0,) * n
            for e, vc in enumerate(proc):
                if len(vc) != n:
                    raise lattice.InvalidInputError("vector clock of wrong dimension", (i, e))
                if vc[i] != e + 1:
                    raise lattice.InvalidInputError("clock does not count own events", (i, e))
                if any(a < b for a, b in zip(vc, prev)):
                    raise lattice.InvalidInputError("clocks decrease along a process", (i, e))
                if any(not 0 <= vc[k] <= heights[k] for k in range(n)):
                    raise lattice.InvalidInputError("clock names a missing event", (i, e))
                prev = vc
        if self.counts is None:
            counts = tuple(tuple(range(h + 1)) for h in heights)
        else:
            counts = tuple(tuple(int(c) for c in row) for row in self.counts)
            if len(counts) != n or any(len(counts[i]) != heights[i] + 1 for i in range(n)):
                raise lattice.InvalidInputError("counts need one entry per state")
        object.__setattr__(self, 'clocks', clocks)
        object.__setattr__(self, 'local_predicate', preds)
        object.__setattr__(self, 'counts', counts)

    @property
    def heights(self):
        return [len(proc) for proc in self.clocks]

    def poset(self):
        """Builds the happened-before poset of the trace.

        Raises:
            InvalidInputError: If the clocks are causally cyclic.
        """
        edges = []
        for i, proc in enumerate(self.clocks):
            for e, vc in enumerate(proc):
                for k, c in enumerate(vc):
                    if k != i and c > 0:
                        edges.append(((k, c), (i, e + 1)))
        return lattice.ChainPoset(self.heights, edges)

    def weighted_level(self, state):
        return sum(self.counts[i][j] for i, j in enumerate(state))

class ConjunctiveAdapter(engines.PredicateAdapter):
    """Forbidden: the local predicate fails, or another process's causal
    past already includes a later event of this one.
    """

    # the rejection graph reads the whole trace
    online = False

    def __init__(self, comp, poset=None):
        super().__init__(poset if poset is not None else comp.poset())
        self.computation = comp

    def _local(self, i, j):
        return self.computation.local_predicate[i][j]

    def forbidden(self, i, state):
        if not self._local(i, state[i]):
            return True
        p = self.poset
        return any(p.clock(k, state[k])[i] > state[i] for k in range(p.n))

    def dual_forbidden(self, i, state):
        if not self._local(i, state[i]):
            return True
        required = self.poset.clock(i, state[i])
        return any(required[k] > state[k] for k in range(self.poset.n))

    def evaluate(self, state):
        if not lattice.is_ideal(self.poset, state):
            return False
        return all(self._local(i, j) for i, j in enumerate(state))

    def rejection_graph(self):
        p = self.poset
        seeds = {(i, 0) for i in range(p.n) if not self._local(i, 0)}
        edges = set()
        for i, h in enumerate(p.heights):
            for j in range(h):
                if not self._local(i, j + 1):
                    edges.add(((i, j), (i, j + 1)))
                required = p.clock(i, j + 1)
                for other, c in enumerate(required):
                    if other != i and c >= 1:
                        edges.add(((i, j), (other, c - 1)))
        return engines.RejectionGraph.for_poset(p, edges, seeds)

def conjunctive_adapter(comp):
    return ConjunctiveAdapter(comp)

def level_k_conjunctive_detect(comp, k, budget=lattice.DEFAULT_BUDGET):
    """Searches for a consistent cut of weighted level ``k`` on which every
    local predicate holds.

    There is no efficient engine for this: the lattice is scanned.

    Raises:
        OracleTooLargeError: If the lattice exceeds ``budget``.
    """
    poset = comp.poset()
    for g in lattice.enumerate_ideals(poset, budget):
        if comp.weighted_level(g) != k:
            continue
        if all(comp.local_predicate[i][j] for i, j in enumerate(g)):
            return engines.DetectionOutcome(
                engines.Status.FOUND, g, 0, 0, 'brute-force'
            )
    return engines.DetectionOutcome(
        engines.Status.NOT_FOUND, None, 0, 0, 'brute-force'
    )
