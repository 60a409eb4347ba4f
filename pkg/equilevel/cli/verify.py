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

"""The ``verify`` command: every applicable engine against the oracles.
"""

import click

from equilevel import cli
from equilevel import core
from equilevel import data
from equilevel import engines
from equilevel import lattice
from equilevel import oracles
from equilevel.templating import environment

class _AcceptsBottom(engines.PredicateAdapter):
    """Wraps an adapter so that its predicate also holds on the bottom.

    Only used to check that ``verify`` notices a broken adapter.
    """

    def __init__(self, inner):
        super().__init__(inner.poset)
        self.inner = inner
        self.online = inner.online

    def evaluate(self, state):
        return state == self.poset.bottom() or self.inner.evaluate(state)

    def get_supported_capabilities(self):
        return self.inner.get_supported_capabilities()

    def helpful_set(self, state):
        return self.inner.helpful_set(state)

    def independent_set(self, state):
        return self.inner.independent_set(state)

    def forbidden(self, index, state):
        return self.inner.forbidden(index, state)

    def dual_forbidden(self, index, state):
        return self.inner.dual_forbidden(index, state)

    def rejection_graph(self):
        return self.inner.rejection_graph()

    def reset(self):
        self.inner.reset()

    def advanced(self, state, indices):
        self.inner.advanced(state, indices)

    def __getattr__(self, name):
        return getattr(self.inner, name)

@cli.main.command()
@click.argument('problem', metavar='INPUT', type=click.Path(exists=True, dir_okay=False))
@click.option('--engine', '-e', 'engine_names', multiple=True,
              help="Engine to check; repeatable. Defaults to all of them.")
@click.option('--workers', type=click.IntRange(min=0), default=None)
@click.option('--budget-ideals', type=click.IntRange(min=1), default=None)
@click.option('--budget-vertices', type=click.IntRange(min=1), default=None)
@click.option('--inject-fault', is_flag=True, hidden=True)
@click.pass_context
def verify(ctx, problem, engine_names, workers, budget_ideals, budget_vertices, inject_fault):
    """Cross-checks every engine applicable to INPUT.

    Exits with 0 if every engine agrees with the oracles, 1 otherwise, and
    refuses (exit 2) instances beyond the oracle budgets.
    """
    settings = ctx.obj
    budget = settings.get(data.DataProperty.BUDGET_IDEALS, budget_ideals)
    try:
        kind, instance, params = data.load_problem(problem)
        core.check_budgets(
            kind, instance, budget,
            settings.get(data.DataProperty.BUDGET_VERTICES, budget_vertices),
        )
        kind_info = core.KINDS[kind]
        names = [core.resolve_engine(kind, name) for name in engine_names]
    except lattice.OracleTooLargeError as exc:
        cli.fail(ctx, "refusing to verify: {}".format(exc))
    except lattice.LatticeError as exc:
        cli.fail(ctx, exc)
    if not names:
        names = [name for name in kind_info.engines if name != 'brute-force'] or ['brute-force']
    rows = []
    for name in names:
        adapter = None
        if inject_fault:
            adapter = _AcceptsBottom(kind_info.adapters[name](instance))
        try:
            outcome, _adapter = core.detect(
                kind, instance, params, name,
                workers=settings.get(data.DataProperty.WORKERS, workers),
                observer=settings.observer(), budget=budget, adapter=adapter,
            )
        except (engines.AdapterContractError, engines.MissingCapabilityError) as exc:
            rows.append({'engine': name, 'found': False, 'rounds': 0,
                         'agrees': False, 'issues': [str(exc)]})
            continue
        issues = core.certify(kind, instance, params, name, outcome, budget)
        rows.append({'engine': name, 'found': outcome.found, 'rounds': outcome.rounds,
                     'agrees': not issues, 'issues': issues})
    report = {
        'kind': kind,
        'rows': rows,
        'agrees': all(row['agrees'] for row in rows),
        'levels': None,
    }
    if not core.is_level_search(kind):
        adapter = kind_info.adapters['brute-force'](instance)
        scan = oracles.brute_force_detect(adapter, adapter.poset, budget)
        report['levels'] = sorted(scan.levels)
        report['satisfying'] = len(scan.satisfying_states)
    click.echo(environment.get_env().get_template('verify.txt').render(report=report), nl=False)
    ctx.exit(cli.FOUND if report['agrees'] else cli.NOT_FOUND)
