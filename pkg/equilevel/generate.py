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

"""Seeded random instances for every problem kind.

Every generator takes a ``random.Random`` and size parameters and returns
``(instance, params)`` as ``data.parse_problem`` would. The same seed always
gives the same instance.
"""

import inspect
import random

from equilevel import lattice
from equilevel import oracles
from equilevel.problems import basis
from equilevel.problems import conjunctive
from equilevel.problems import graphs
from equilevel.problems import housing
from equilevel.problems import marriage
from equilevel.problems import matching
from equilevel.problems import spanning

def _check_size(name, value, low=1, high=None):
    if value < low or (high is not None and value > high):
        raise lattice.InvalidInputError(
            "{} must be between {} and {}".format(name, low, high or 'unbounded'), value
        )

def gen_matching(rng, n=4, m=None, density=0.4):
    m = n if m is None else m
    _check_size('n', n, 0)
    _check_size('m', m, 0)
    edges = [(l, r) for l in range(n) for r in range(m) if rng.random() < density]
    return matching.BipartiteInstance(n, m, edges), {}

def gen_mst(rng, vertices=6, density=0.3, unique_weights=False):
    """A connected graph: a random spanning tree plus extra edges.
    """
    _check_size('vertices', vertices)
    order = list(range(vertices))
    rng.shuffle(order)
    pairs = set()
    for k in range(1, vertices):
        u, v = order[k], order[rng.randrange(k)]
        pairs.add((min(u, v), max(u, v)))
    for u in range(vertices):
        for v in range(u + 1, vertices):
            if (u, v) not in pairs and rng.random() < density:
                pairs.add((u, v))
    pairs = sorted(pairs)
    if unique_weights:
        weights = rng.sample(range(1, 10 * len(pairs) + 2), len(pairs))
    else:
        weights = [rng.randint(1, 5) for _ in pairs]
    edges = [(u, v, w) for (u, v), w in zip(pairs, weights)]
    return spanning.WeightedGraph(vertices, edges, unique_weights), {}

def gen_basis(rng, n=4, m=3):
    """``n`` vectors of dimension ``m`` with small entries, zeros favoured
    so dependencies show up.
    """
    _check_size('n', n, 0)
    _check_size('m', m, 0)
    vectors = [
        [rng.choice((-2, -1, 0, 0, 0, 1, 2)) for _ in range(m)] for _ in range(n)
    ]
    return basis.VectorSet(m, vectors), {}

def gen_marriage(rng, n=4):
    _check_size('n', n)
    mpref = [rng.sample(range(n), n) for _ in range(n)]
    rank = [rng.sample(range(n), n) for _ in range(n)]
    return marriage.MarriageInstance(n, mpref, rank), {}

def gen_housing(rng, n=4):
    _check_size('n', n)
    return housing.HousingInstance(n, [rng.sample(range(n), n) for _ in range(n)]), {}

def _random_trace(rng, n, m, density, truth=0.6):
    remaining = [m] * n
    clocks = [[] for _ in range(n)]
    history = []
    while any(remaining):
        i = rng.choice([p for p in range(n) if remaining[p]])
        vc = list(clocks[i][-1]) if clocks[i] else [0] * n
        # receive from an earlier event of another process
        senders = [h for h in history if h[0] != i]
        if senders and rng.random() < density:
            _sender, sent = rng.choice(senders)
            vc = [max(a, b) for a, b in zip(vc, sent)]
        vc[i] = len(clocks[i]) + 1
        clocks[i].append(vc)
        history.append((i, vc))
        remaining[i] -= 1
    preds = [[rng.random() < truth for _ in range(m + 1)] for _ in range(n)]
    return conjunctive.Computation(n, clocks, preds)

def gen_conjunctive(rng, n=3, m=3, density=0.4):
    _check_size('n', n)
    _check_size('m', m, 0)
    return _random_trace(rng, n, m, density), {}

def gen_subset_values(rng, n):
    return [rng.randint(1, 9) for _ in range(n)]

def gen_levelk(rng, n=4):
    _check_size('n', n, 0)
    x = gen_subset_values(rng, n)
    k = rng.randint(0, sum(x))
    return oracles.build_subset_sum_computation(x), {'k': k}

def gen_subset_sum(rng, n=4):
    _check_size('n', n, 0)
    x = gen_subset_values(rng, n)
    k = rng.randint(0, sum(x))
    return oracles.build_subset_sum_computation(x), {'k': k, 'x': x}

def _random_digraph(rng, vertices, density):
    _check_size('vertices', vertices)
    matrix = [
        [i != j and rng.random() < density for j in range(vertices)]
        for i in range(vertices)
    ]
    return graphs.Digraph(vertices, matrix, 0)

def gen_reach(rng, vertices=6, density=0.2):
    return _random_digraph(rng, vertices, density), {}

def gen_closure(rng, vertices=5, density=0.2):
    return _random_digraph(rng, vertices, density), {}

GENERATORS = {
    'matching': gen_matching,
    'mst': gen_mst,
    'basis': gen_basis,
    'marriage': gen_marriage,
    'housing': gen_housing,
    'conjunctive': gen_conjunctive,
    'levelk': gen_levelk,
    'reach': gen_reach,
    'closure': gen_closure,
    'subset-sum': gen_subset_sum,
}

def generate(kind, seed, **sizes):
    """Generates an instance of ``kind`` from ``seed``.

    Size parameters a generator does not take are ignored.
    """
    func = GENERATORS[kind]
    accepted = inspect.signature(func).parameters
    rng = random.Random(seed)
    return func(rng, **{k: v for k, v in sizes.items() if k in accepted and v is not None})
