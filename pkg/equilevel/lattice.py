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

"""Posets of chains and the distributive lattice of their ideals.

A ``ChainPoset`` is ``n`` chains of events, with an optional happened-before
relation between events on different chains. Chain ``i`` has local states
``0..heights[i]``; state ``j`` is reached after ``j`` events. A
``GlobalState`` picks one local state per chain, and it is an element of the
lattice iff it is an ideal (downward closed under happened-before).

Events are numbered from 1: event ``e`` on chain ``i`` moves the chain from
state ``e - 1`` to state ``e``.
"""

import math

DEFAULT_BUDGET = 2 ** 22

class LatticeError(Exception):
    """Base class for errors raised by equilevel.
    """
    pass

class InvalidInputError(LatticeError, ValueError):
    """Raised when an input violates the invariants of its type.
    """
    pass

class AtTopError(LatticeError, LookupError):
    """Raised when advancing a chain that is already at its last state.
    """
    pass

class AtBottomError(LatticeError, LookupError):
    """Raised when retreating a chain that is already at state 0.
    """
    pass

class OracleTooLargeError(LatticeError):
    """Raised when an exhaustive scan would exceed the configured budget.
    """
    pass

class GlobalState(tuple):
    """A global state: one local state (event count) per chain.

    Ordering operators are those of ``tuple`` (lexicographic), which is the
    enumeration order. Use ``is_below`` for the lattice order.
    """

    __slots__ = ()

    def __new__(cls, values=()):
        return super().__new__(cls, (int(v) for v in values))

    @property
    def level(self):
        """The cardinality of the ideal, i.e. the number of events taken.
        """
        return sum(self)

    def is_below(self, other):
        """Returns whether this state is componentwise <= ``other``.
        """
        if len(self) != len(other):
            raise InvalidInputError("dimension mismatch", len(self), len(other))
        return all(a <= b for a, b in zip(self, other))

    def meet(self, other):
        if len(self) != len(other):
            raise InvalidInputError("dimension mismatch", len(self), len(other))
        return GlobalState(min(a, b) for a, b in zip(self, other))

    def join(self, other):
        if len(self) != len(other):
            raise InvalidInputError("dimension mismatch", len(self), len(other))
        return GlobalState(max(a, b) for a, b in zip(self, other))

    def replace(self, idx, value):
        """Returns a copy with component ``idx`` set to ``value``.
        """
        values = list(self)
        values[idx] = value
        return GlobalState(values)

    def __repr__(self):
        return "GlobalState({!r})".format(list(self))

class ChainPoset:
    """A poset made of ``n`` chains plus cross-chain causal edges.

    The causal edges are closed once, at construction, into one vector clock
    per event. ``clock(i, e)[k]`` is the number of events of chain ``k`` that
    every ideal containing event ``e`` of chain ``i`` must also contain.

    Args:
        heights (iterable of int): Number of events on each chain.
        causal_edges (iterable): Pairs ``((i, a), (j, b))``: event ``a`` on
            chain ``i`` happened before event ``b`` on chain ``j``.

    Raises:
        InvalidInputError: If there are no chains, a height is negative, an
            edge names a missing event, or the edges form a cycle.
    """

    def __init__(self, heights, causal_edges=()):
        self.heights = tuple(int(h) for h in heights)
        if not self.heights:
            raise InvalidInputError("a poset needs at least one chain")
        if any(h < 0 for h in self.heights):
            raise InvalidInputError("negative chain height", self.heights)
        edges = []
        for edge in causal_edges:
            try:
                (i, a), (j, b) = edge
            except (TypeError, ValueError) as exc:
                raise InvalidInputError("malformed causal edge", edge) from exc
            for chain, event in ((i, a), (j, b)):
                if not 0 <= chain < self.n:
                    raise InvalidInputError("edge names missing chain", edge)
                if not 1 <= event <= self.heights[chain]:
                    raise InvalidInputError("edge names missing event", edge)
            edges.append(((i, a), (j, b)))
        self.causal_edges = tuple(sorted(set(edges)))
        self._clocks = self._close()

    @property
    def n(self):
        return len(self.heights)

    def _close(self):
        """Computes one vector clock per event by fixed-point iteration.
        """
        incoming = {}
        for (i, a), (j, b) in self.causal_edges:
            incoming.setdefault((j, b), []).append((i, a))
        clocks = [[None] * (h + 1) for h in self.heights]
        for j, h in enumerate(self.heights):
            for b in range(h + 1):
                vec = [0] * self.n
                vec[j] = b
                clocks[j][b] = vec
        # every pass either stabilizes or raises some component; components
        # are bounded by the heights, so this terminates.
        changed = True
        while changed:
            changed = False
            for j, h in enumerate(self.heights):
                for b in range(1, h + 1):
                    vec = clocks[j][b]
                    sources = [clocks[j][b - 1]]
                    sources.extend(clocks[i][a] for i, a in incoming.get((j, b), ()))
                    for src in sources:
                        for k in range(self.n):
                            if src[k] > vec[k]:
                                vec[k] = src[k]
                                changed = True
        # an edge whose target already lies in its source's causal past
        # closes a cycle
        for (i, a), (j, b) in self.causal_edges:
            if clocks[i][a][j] >= b:
                raise InvalidInputError("causal edges form a cycle", ((i, a), (j, b)))
        return tuple(tuple(tuple(vec) for vec in chain) for chain in clocks)

    def clock(self, chain, position):
        """Returns the vector clock of the ideal generated by the first
        ``position`` events of ``chain``.

        ``clock(i, 0)`` is all zeros.
        """
        return self._clocks[chain][position]

    def bottom(self):
        return GlobalState([0] * self.n)

    def top(self):
        return GlobalState(self.heights)

    def is_top(self, g):
        return tuple(g) == self.heights

    def ideal_count_bound(self):
        """Upper bound on the number of ideals: the product-lattice size.
        """
        return math.prod(h + 1 for h in self.heights)

    def __eq__(self, other):
        if not isinstance(other, ChainPoset):
            return NotImplemented
        return (self.heights, self.causal_edges) == (other.heights, other.causal_edges)

    def __hash__(self):
        return hash((self.heights, self.causal_edges))

    def __repr__(self):
        return "ChainPoset({!r}, {!r})".format(list(self.heights), list(self.causal_edges))

def _check_dimensions(p, g):
    if len(g) != p.n:
        raise InvalidInputError("state has wrong dimension", len(g), p.n)
    for i, v in enumerate(g):
        if not 0 <= v <= p.heights[i]:
            raise InvalidInputError("state component out of range", i, v)

def is_ideal(p, g):
    """Returns whether ``g`` is downward closed in ``p``.

    Args:
        p (ChainPoset): The poset.
        g (GlobalState): The candidate state.

    Raises:
        InvalidInputError: If ``g`` does not fit ``p``.
    """
    _check_dimensions(p, g)
    for j, b in enumerate(g):
        required = p.clock(j, b)
        for k in range(p.n):
            if required[k] > g[k]:
                return False
    return True

def advance(p, g, idx):
    """Returns ``g`` advanced by one event on chain ``idx``.

    The result is not checked for the ideal property.

    Raises:
        AtTopError: If chain ``idx`` is at its last state.
    """
    if not 0 <= idx < p.n:
        raise InvalidInputError("no such chain", idx)
    if g[idx] >= p.heights[idx]:
        raise AtTopError("chain is at its top", idx)
    return GlobalState(g).replace(idx, g[idx] + 1)

def retreat(p, g, idx):
    """Returns ``g`` retreated by one event on chain ``idx``.

    Raises:
        AtBottomError: If chain ``idx`` is at state 0.
    """
    if not 0 <= idx < p.n:
        raise InvalidInputError("no such chain", idx)
    if g[idx] <= 0:
        raise AtBottomError("chain is at its bottom", idx)
    return GlobalState(g).replace(idx, g[idx] - 1)

def advance_many(p, g, indices):
    """Advances ``g`` once on every chain in ``indices``, as one batch.
    """
    for idx in set(indices):
        g = advance(p, g, idx)
    return GlobalState(g)

def retreat_many(p, g, indices):
    for idx in set(indices):
        g = retreat(p, g, idx)
    return GlobalState(g)

def enumerate_ideals(p, budget=DEFAULT_BUDGET):
    """Yields every ideal of ``p`` once, in lexicographic order.

    Args:
        p (ChainPoset): The poset.
        budget (int): Refuse posets whose product lattice is larger.

    Raises:
        OracleTooLargeError: If the product lattice exceeds ``budget``.
    """
    if p.ideal_count_bound() > budget:
        raise OracleTooLargeError(
            "lattice too large for exhaustive scan", p.ideal_count_bound(), budget
        )
    return _enumerate(p)

def _enumerate(p):
    n = p.n
    g = [0] * n

    def fits(k, v):
        # constraints between chain k and the already-assigned chains < k
        clk = p.clock(k, v)
        for i in range(k):
            if clk[i] > g[i] or p.clock(i, g[i])[k] > v:
                return False
        return True

    def walk(k):
        if k == n:
            yield GlobalState(g)
            return
        for v in range(p.heights[k] + 1):
            if fits(k, v):
                g[k] = v
                yield from walk(k + 1)
        g[k] = 0

    yield from walk(0)
