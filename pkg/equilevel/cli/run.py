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

"""The ``run`` command: one engine on one problem file.
"""

import click

from equilevel import cli
from equilevel import core
from equilevel import data
from equilevel import lattice
from equilevel.templating import environment

@cli.main.command()
@click.argument('kind', type=click.Choice(data.KINDS))
@click.argument('problem', metavar='INPUT', type=click.Path(exists=True, dir_okay=False))
@click.option('--engine', '-e', default=None,
              help="Engine name; defaults to the kind's usual engine.")
@click.option('--k', 'k', type=int, default=None, help="Target level for levelk and subset-sum.")
@click.option('--workers', type=click.IntRange(min=0), default=None,
              help="Threads per superstep, 0 for sequential.")
@click.option('--budget-ideals', type=click.IntRange(min=1), default=None,
              help="Largest lattice the brute-force engine will scan.")
@click.option('--output', '-o', type=click.File('w'), default='-')
@click.pass_context
def run(ctx, kind, problem, engine, k, workers, budget_ideals, output):
    """Runs one detection on INPUT and writes a result document.

    Exits with 0 if a satisfying state was found and 1 if not.
    """
    settings = ctx.obj
    try:
        file_kind, instance, params = data.load_problem(problem)
    except data.ProblemFileError as exc:
        cli.fail(ctx, exc)
    if file_kind != kind:
        cli.fail(ctx, "{} holds a {} problem, not {}".format(problem, file_kind, kind))
    params = dict(params)
    if k is not None:
        params['k'] = k
    try:
        outcome, adapter = core.detect(
            kind, instance, params, engine,
            workers=settings.get(data.DataProperty.WORKERS, workers),
            observer=settings.observer(),
            budget=settings.get(data.DataProperty.BUDGET_IDEALS, budget_ideals),
        )
    except lattice.LatticeError as exc:
        cli.fail(ctx, exc)
    result = core.summarize(kind, instance, params, outcome, adapter)
    output.write(environment.get_env().get_template('result.toml').render(result=result))
    ctx.exit(cli.FOUND if outcome.found else cli.NOT_FOUND)
