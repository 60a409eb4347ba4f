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

"""Reference implementations used to certify engine results.

Nothing here calls into the engines or the adapters' hooks: every oracle is
its own textbook algorithm, so agreement between the two is a real
cross-check. Instances are small; these favour obviousness over speed.
"""

import dataclasses
import itertools

from fractions import Fraction

from equilevel import lattice
from equilevel.lattice import GlobalState
from equilevel.problems.conjunctive import Computation

@dataclasses.dataclass(frozen=True)
class OracleReport:
    """Every satisfying ideal of a lattice, found by exhaustive scan.

    Attributes:
        satisfying_states (tuple): In lexicographic order.
        least (GlobalState): The meet of the satisfying states, if it
            satisfies too; otherwise None.
        greatest (GlobalState): The join, likewise.
        levels (frozenset): Levels at which satisfying states sit.
    """
    satisfying_states: tuple
    least: GlobalState = None
    greatest: GlobalState = None
    levels: frozenset = frozenset()

    @property
    def found(self):
        return bool(self.satisfying_states)

    @property
    def equilevel(self):
        return len(self.levels) <= 1

    @property
    def solitary(self):
        return len(self.satisfying_states) <= 1

def brute_force_detect(adapter, poset, budget=lattice.DEFAULT_BUDGET):
    """Evaluates the adapter's predicate on every ideal of ``poset``.

    Raises:
        OracleTooLargeError: If the lattice exceeds ``budget``.
    """
    adapter.reset()
    found = [g for g in lattice.enumerate_ideals(poset, budget) if adapter.evaluate(g)]
    if not found:
        return OracleReport(())
    satisfying = set(found)
    least = found[0]
    greatest = found[0]
    for g in found[1:]:
        least = least.meet(g)
        greatest = greatest.join(g)
    return OracleReport(
        tuple(found),
        least if least in satisfying else None,
        greatest if greatest in satisfying else None,
        frozenset(g.level for g in found),
    )

def least_element_predicate(report):
    """Refines a predicate to hold only on its minimal satisfying states.

    For a lattice-linear predicate the refinement holds on exactly one
    state, the least one.

    Returns:
        callable: ``refined(state) -> bool``.
    """
    satisfying = report.satisfying_states

    def refined(state):
        state = GlobalState(state)
        if state not in satisfying:
            return False
        return not any(h != state and h.is_below(state) for h in satisfying)

    return refined

def frontier_distances(report, poset):
    """Returns how far the least satisfying state sits above the bottom and
    the greatest below the top, or None for an unsatisfiable predicate.
    """
    if report.least is None or report.greatest is None:
        return None
    return report.least.level, poset.top().level - report.greatest.level

# --- matching ----------------------------------------------------------

def max_matching(inst):
    """Size of a maximum matching, by augmenting paths from each left vertex.
    """
    adj = inst.neighbours()
    partner = {}

    def augment(l, visited):
        for r in adj[l]:
            if r in visited:
                continue
            visited.add(r)
            if r not in partner or augment(partner[r], visited):
                partner[r] = l
                return True
        return False

    return sum(1 for l in range(inst.left_count) if augment(l, set()))

# --- spanning trees ----------------------------------------------------

class _UnionFind:

    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True

def kruskal_mst(graph):
    """Minimum spanning forest by Kruskal's algorithm.

    Ties are broken by edge index.

    Returns:
        (frozenset of int, int): Edge indices and total weight.
    """
    uf = _UnionFind(graph.vertex_count)
    chosen = set()
    order = sorted(range(len(graph.edges)), key=lambda j: (graph.edges[j][2], j))
    for j in order:
        u, v, _w = graph.edges[j]
        if uf.union(u, v):
            chosen.add(j)
    return frozenset(chosen), sum(graph.edges[j][2] for j in chosen)

def exhaustive_spanning_weight(graph):
    """Minimum weight over all spanning forests, by trying every edge subset
    of the right size.
    """
    uf = _UnionFind(graph.vertex_count)
    for u, v, _w in graph.edges:
        uf.union(u, v)
    size = graph.vertex_count - len({uf.find(x) for x in range(graph.vertex_count)})
    best = None
    for subset in itertools.combinations(graph.edges, size):
        uf = _UnionFind(graph.vertex_count)
        if all(uf.union(u, v) for u, v, _w in subset):
            weight = sum(w for _u, _v, w in subset)
            if best is None or weight < best:
                best = weight
    return best

# --- basis -------------------------------------------------------------

def matrix_rank(vectors):
    """Rank by Gaussian elimination over the rationals.
    """
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    rank = 0
    for col in range(len(rows[0])):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col] / rows[rank][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank

# --- stable marriage ---------------------------------------------------

def gale_shapley(inst):
    """Man-proposing deferred acceptance.

    Returns:
        list of int: The woman matched to each man.
    """
    next_choice = [0] * inst.n
    husband = {}
    free = list(range(inst.n))
    while free:
        man = free.pop()
        woman = inst.mpref[man][next_choice[man]]
        next_choice[man] += 1
        current = husband.get(woman)
        if current is None:
            husband[woman] = man
        elif inst.rank[woman][man] < inst.rank[woman][current]:
            husband[woman] = man
            free.append(current)
        else:
            free.append(man)
    wife = [None] * inst.n
    for woman, man in husband.items():
        wife[man] = woman
    return wife

def blocking_pairs(inst, assignment):
    """Returns every (man, woman) pair preferring each other to their
    partners in ``assignment``.
    """
    husband = {w: m for m, w in enumerate(assignment)}
    pairs = []
    for man in range(inst.n):
        row = list(inst.mpref[man])
        for woman in row[:row.index(assignment[man])]:
            if inst.rank[woman][man] < inst.rank[woman][husband[woman]]:
                pairs.append((man, woman))
    return pairs

def stable_assignments(inst):
    """Every stable matching, by trying every permutation.
    """
    return [
        list(p) for p in itertools.permutations(range(inst.n))
        if not blocking_pairs(inst, list(p))
    ]

# --- housing -----------------------------------------------------------

def top_trading_cycles(inst):
    """Gale's top trading cycles.

    Returns:
        list of int: The house allocated to each agent.
    """
    remaining = set(range(inst.n))
    allocation = [None] * inst.n
    while remaining:
        points = {
            a: next(h for h in inst.pref[a] if h in remaining) for a in remaining
        }
        # walk pointers from any agent until a repeat: that's a cycle
        a = min(remaining)
        seen = []
        while a not in seen:
            seen.append(a)
            a = points[a]
        cycle = seen[seen.index(a):]
        for member in cycle:
            allocation[member] = points[member]
        remaining.difference_update(cycle)
    return allocation

def blocking_coalition(inst, allocation):
    """Searches for agents who could trade their own houses among
    themselves and all do strictly better than ``allocation``.

    Returns:
        tuple of int, or None.
    """
    rank = [{h: k for k, h in enumerate(row)} for row in inst.pref]
    for size in range(1, inst.n + 1):
        for coalition in itertools.combinations(range(inst.n), size):
            for houses in itertools.permutations(coalition):
                if all(
                    rank[a][h] < rank[a][allocation[a]]
                    for a, h in zip(coalition, houses)
                ):
                    return coalition
    return None

# --- graphs ------------------------------------------------------------

def floyd_warshall_closure(digraph):
    """Reflexive transitive closure as a list of boolean rows.
    """
    n = digraph.vertex_count
    reach = [[digraph.matrix[i][j] or i == j for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    return reach

# --- subset sum --------------------------------------------------------

def subset_sum_dp(x, k):
    """Whether some sub-multiset of ``x`` sums to ``k``.
    """
    if k < 0:
        return False
    reachable = [True] + [False] * k
    for value in x:
        for total in range(k, value - 1, -1):
            if reachable[total - value]:
                reachable[total] = True
    return reachable[k]

def build_subset_sum_computation(x):
    """Encodes a subset-sum instance as a level-k conjunctive detection.

    Each value becomes an independent process with two local states storing
    0 and ``x_i`` events. The local predicates hold everywhere, so a cut of
    weighted level ``k`` exists iff a subset sums to ``k``.

    Raises:
        InvalidInputError: If a value is not positive.
    """
    x = [int(v) for v in x]
    if any(v <= 0 for v in x):
        raise lattice.InvalidInputError("subset-sum values must be positive", x)
    if not x:
        return Computation(1, ((),), ((True,),))
    n = len(x)
    clocks = tuple(
        ((tuple(1 if k == i else 0 for k in range(n)),),) for i in range(n)
    )
    return Computation(
        n, clocks, tuple((True, True) for _ in x), tuple((0, v) for v in x)
    )
