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

"""The equilevel CLI.

This module defines the main command group and the helpers its commands
share. Submodules define actual commands.
"""

import click

from equilevel import data

# exit statuses
FOUND = 0
NOT_FOUND = 1
USAGE = 2

class Settings:
    """Effective settings of one CLI invocation.
    """

    def __init__(self, verbose):
        self.verbose = verbose
        self.config = data.ConfigManager.new_default()
        for source, exc in zip(self.config.sources, self.config.update()):
            # a missing config file is normal
            if exc is not None and not isinstance(exc, FileNotFoundError):
                click.echo("warning: ignoring {!r}: {}".format(source, exc), err=True)

    def get(self, prop, override=None):
        if override is not None:
            return override
        return self.config.get_property_value(prop)

    def observer(self):
        if not self.verbose:
            return None

        def observe(engine, rounds, state, indices):
            click.echo("{} round {}: advanced {} -> {}".format(
                engine, rounds, list(indices), list(state)), err=True)

        return observe

def fail(ctx, message, status=USAGE):
    click.echo("error: {}".format(message), err=True)
    ctx.exit(status)

@click.group()
@click.option('--verbose', '-v', is_flag=True, help="Trace every superstep on stderr.")
@click.pass_context
def main(ctx, verbose):
    ctx.obj = Settings(verbose)
