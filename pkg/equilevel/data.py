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

"""This module handles equilevel's config sources and problem files.

Config sources are layered: the first source with a valid value for a
property wins, and the built-in defaults come last. Problem files are TOML
documents with a top-level ``kind`` and a ``[payload]`` table.
"""

import abc
import os
import tomllib

from enum import Enum

import qtoml

import equilevel.dirs
from equilevel import lattice
from equilevel import oracles
from equilevel.problems import basis
from equilevel.problems import conjunctive
from equilevel.problems import graphs
from equilevel.problems import housing
from equilevel.problems import marriage
from equilevel.problems import matching
from equilevel.problems import spanning

class _ValidationError(Exception):
    pass

def _check_count(obj):
    # bool is an int, but not a count
    if isinstance(obj, int) and not isinstance(obj, bool) and obj >= 0:
        return obj
    raise _ValidationError(obj)

class DataProperty(Enum):
    """Represents values that can be returned by a data source.

    The value is an id and the expected type.
    """
    BUDGET_IDEALS = (1, int)
    BUDGET_VERTICES = (2, int)
    WORKERS = (3, int)

    def get_type(self):
        """Returns the expected type for values from this DataProperty.
        """
        return self.value[1]

class PropertyError(LookupError):
    """Raised to indicate improper use of a DataProperty.
    """
    pass

class DataSource(abc.ABC):
    @abc.abstractmethod
    def update(self):
        """Refreshes the data associated with this source, if necessary.

        Returns:
            The error encountered while loading, or None.
        """
        pass

    @abc.abstractmethod
    def exists(self):
        """Returns whether this source has usable data.
        """
        pass

    @abc.abstractmethod
    def get_supported_properties(self):
        """Returns an iterable of properties supported by this data source.
        """
        return ()

    @abc.abstractmethod
    def get_property_value(self, prop):
        """Returns the value associated with the given property.

        Raises:
            PropertyError: If the property is not supported by this data
            source.
            LookupError: If the property is supported, but isn't available.
        """
        raise PropertyError

class ObjectDataSource(DataSource):
    """A DataSource backed by a Python object, such as a parsed
    ``config.toml``.

    Recognized keys are ``workers`` and a ``[budget]`` table with
    ``ideals`` and ``vertices``.
    """

    @staticmethod
    def _get_budget_ideals(obj):
        budget = obj.get('budget')
        if not isinstance(budget, dict):
            raise _ValidationError
        value = _check_count(budget.get('ideals'))
        if value < 1:
            raise _ValidationError(value)
        return value

    @staticmethod
    def _get_budget_vertices(obj):
        budget = obj.get('budget')
        if not isinstance(budget, dict):
            raise _ValidationError
        value = _check_count(budget.get('vertices'))
        if value < 1:
            raise _ValidationError(value)
        return value

    @staticmethod
    def _get_workers(obj):
        return _check_count(obj.get('workers'))

    _SUPPORTED_PROPERTIES = {
        DataProperty.BUDGET_IDEALS: _get_budget_ideals,
        DataProperty.BUDGET_VERTICES: _get_budget_vertices,
        DataProperty.WORKERS: _get_workers,
    }

    def __init__(self, obj):
        self._obj = obj

    def update(self):
        pass

    def exists(self):
        return True

    def get_property_value(self, prop):
        try:
            factory = self.get_supported_properties()[prop]
        except KeyError as exc:
            raise PropertyError from exc
        try:
            return factory(self._obj)
        except _ValidationError as exc:
            raise LookupError from exc

    @classmethod
    def get_supported_properties(cls):
        return cls._SUPPORTED_PROPERTIES

class LocalDataSource(ObjectDataSource):
    def __init__(self, filename):
        super().__init__({})
        self.file_exists = False
        self.last_updated = None
        self.filename = filename

    def update(self):
        try:
            updtime = self.last_updated
            self.last_updated = os.stat(self.filename).st_mtime
            if not self.file_exists or updtime != self.last_updated:
                with open(self.filename, 'rb') as f:
                    self._obj = tomllib.load(f)
            self.file_exists = True
        except (OSError, UnicodeDecodeError, tomllib.TOMLDecodeError) as e:
            self.file_exists = False
            self.last_updated = None
            self._obj = {}
            return e

    def exists(self):
        return self.file_exists

    def __repr__(self):
        return "LocalDataSource({!r})".format(self.filename)

class DefaultsDataSource(ObjectDataSource):
    """The built-in defaults.
    """
    DEFAULTS = {
        'budget': {'ideals': lattice.DEFAULT_BUDGET, 'vertices': 32},
        'workers': os.cpu_count() or 0,
    }

    def __init__(self):
        super().__init__(self.DEFAULTS)

    def __repr__(self):
        return "DefaultsDataSource()"

class ConfigManager(DataSource):
    """A ConfigManager takes care of managing config sources and
    collecting their details.

    Args:
        sources (list of DataSource): The config sources to be managed.
    """
    def __init__(self, sources):
        self.sources = sources

    @classmethod
    def new_default(cls):
        srcs = [LocalDataSource(d + "/config.toml") for d in equilevel.dirs.config_search_path()]
        return cls(srcs + [DefaultsDataSource()])

    def exists(self):
        return True

    def update(self):
        return [source.update() for source in self.sources]

    def get_supported_properties(self):
        return DataProperty

    def get_property_value(self, prop):
        if prop not in self.get_supported_properties():
            raise PropertyError
        for source in self.sources:
            try:
                return source.get_property_value(prop)
            except LookupError:
                pass
        raise LookupError(prop)

# --- problem files -----------------------------------------------------

class ProblemFileError(lattice.LatticeError):
    """Raised when a problem file is malformed or its payload is invalid.
    """
    pass

KINDS = (
    'matching', 'mst', 'basis', 'marriage', 'housing', 'conjunctive',
    'levelk', 'reach', 'closure', 'subset-sum',
)

def _ints(values):
    return [[int(x) for x in row] for row in values]

def _parse_digraph(payload):
    n = payload['vertex_count']
    if 'matrix' in payload:
        matrix = payload['matrix']
    else:
        matrix = [[False] * n for _ in range(n)]
        for i, j in payload.get('arcs', []):
            if not (0 <= i < n and 0 <= j < n):
                raise lattice.InvalidInputError("arc out of range", (i, j))
            matrix[i][j] = True
    return graphs.Digraph(n, matrix, payload.get('source', 0))

def _dump_digraph(d):
    return {
        'vertex_count': d.vertex_count,
        'source': d.source,
        'arcs': [list(a) for a in d.arcs()],
    }

def _parse_computation(payload):
    return conjunctive.Computation(
        payload['process_count'],
        payload['clocks'],
        payload['local_predicate'],
        payload.get('counts'),
    )

def _dump_computation(c):
    out = {
        'process_count': c.process_count,
        'clocks': [_ints(proc) for proc in c.clocks],
        'local_predicate': [list(row) for row in c.local_predicate],
    }
    if c.counts != tuple(tuple(range(h + 1)) for h in c.heights):
        out['counts'] = _ints(c.counts)
    return out

def _parse_levelk(payload):
    if 'x' in payload:
        x = [int(v) for v in payload['x']]
        return oracles.build_subset_sum_computation(x), {'k': payload.get('k', 0), 'x': x}
    return _parse_computation(payload), {'k': payload.get('k', 0)}

def _parse_subset_sum(payload):
    x = [int(v) for v in payload['x']]
    return oracles.build_subset_sum_computation(x), {'k': payload.get('k', 0), 'x': x}

_PARSERS = {
    'matching': lambda p: (matching.BipartiteInstance(
        p['left_count'], p['right_count'], p.get('edges', [])), {}),
    'mst': lambda p: (spanning.WeightedGraph(
        p['vertex_count'], p.get('edges', []), p.get('unique_weights', False)), {}),
    'basis': lambda p: (basis.VectorSet(p['dimension'], p.get('vectors', [])), {}),
    'marriage': lambda p: (marriage.MarriageInstance(p['n'], p['mpref'], p['rank']), {}),
    'housing': lambda p: (housing.HousingInstance(p['n'], p['pref']), {}),
    'conjunctive': lambda p: (_parse_computation(p), {}),
    'levelk': _parse_levelk,
    'reach': lambda p: (_parse_digraph(p), {}),
    'closure': lambda p: (_parse_digraph(p), {}),
    'subset-sum': _parse_subset_sum,
}

_DUMPERS = {
    'matching': lambda i, _p: {
        'left_count': i.left_count, 'right_count': i.right_count,
        'edges': _ints(i.edges)},
    'mst': lambda i, _p: {
        'vertex_count': i.vertex_count, 'unique_weights': i.unique_weights,
        'edges': _ints(i.edges)},
    'basis': lambda i, _p: {'dimension': i.dimension, 'vectors': _ints(i.vectors)},
    'marriage': lambda i, _p: {'n': i.n, 'mpref': _ints(i.mpref), 'rank': _ints(i.rank)},
    'housing': lambda i, _p: {'n': i.n, 'pref': _ints(i.pref)},
    'conjunctive': lambda i, _p: _dump_computation(i),
    'levelk': lambda i, p: dict(_dump_computation(i), k=p.get('k', 0)),
    'reach': lambda i, _p: _dump_digraph(i),
    'closure': lambda i, _p: _dump_digraph(i),
    'subset-sum': lambda _i, p: {'x': list(p['x']), 'k': p.get('k', 0)},
}

def parse_problem(text):
    """Parses and validates a problem document.

    Returns:
        (str, object, dict): The kind, the instance and extra parameters
        (such as ``k``).

    Raises:
        ProblemFileError: If the document is malformed or invalid.
    """
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ProblemFileError("not a valid TOML document: {}".format(exc)) from exc
    kind = doc.get('kind')
    if kind not in KINDS:
        raise ProblemFileError("unknown problem kind: {!r}".format(kind))
    payload = doc.get('payload')
    if not isinstance(payload, dict):
        raise ProblemFileError("missing [payload] table")
    try:
        instance, params = _PARSERS[kind](payload)
    except KeyError as exc:
        raise ProblemFileError("payload lacks field {}".format(exc)) from exc
    except (TypeError, ValueError) as exc:
        raise ProblemFileError("invalid {} payload: {}".format(kind, exc)) from exc
    k = params.get('k')
    if k is not None and (not isinstance(k, int) or isinstance(k, bool)):
        raise ProblemFileError("k must be an integer")
    return kind, instance, params

def load_problem(filename):
    """Reads and parses a problem file.
    """
    try:
        with open(filename, 'rb') as f:
            text = f.read().decode('utf-8')
    except (OSError, UnicodeDecodeError) as exc:
        raise ProblemFileError("cannot read {}: {}".format(filename, exc)) from exc
    return parse_problem(text)

def dump_problem(kind, instance, params=None):
    """Serializes an instance as a problem document.
    """
    payload = _DUMPERS[kind](instance, params or {})
    return "# Generated by equilevel\n" + qtoml.dumps({'kind': kind, 'payload': payload})
