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

"""The ``gen`` command: seeded random problem files.
"""

import click

from equilevel import cli
from equilevel import data
from equilevel import generate
from equilevel import lattice

@cli.main.command()
@click.argument('kind', type=click.Choice(data.KINDS))
@click.option('--n', 'n', type=int, default=None, help="Agents, men, vectors, processes or values.")
@click.option('--vertices', type=int, default=None)
@click.option('--m', 'm', type=int, default=None, help="Right side, dimension or events per process.")
@click.option('--density', type=click.FloatRange(0, 1), default=None)
@click.option('--unique-weights', is_flag=True)
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--budget-vertices', type=click.IntRange(min=1), default=None)
@click.option('--output', '-o', type=click.File('w'), default='-')
@click.pass_context
def gen(ctx, kind, n, vertices, m, density, unique_weights, seed, budget_vertices, output):
    """Writes a random KIND problem. The same seed gives the same file.
    """
    limit = ctx.obj.get(data.DataProperty.BUDGET_VERTICES, budget_vertices)
    for name, size in (('--n', n), ('--m', m), ('--vertices', vertices)):
        if size is not None and size > limit:
            cli.fail(ctx, "{} {} exceeds the vertex budget {}".format(name, size, limit))
    sizes = {'n': n, 'm': m, 'vertices': vertices, 'density': density}
    if kind == 'mst':
        sizes['unique_weights'] = unique_weights
    try:
        instance, params = generate.generate(kind, seed, **sizes)
    except lattice.InvalidInputError as exc:
        cli.fail(ctx, exc)
    output.write(data.dump_problem(kind, instance, params))
