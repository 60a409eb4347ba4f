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

import jinja2

from equilevel.templating import templates
from equilevel.templating import toml

def get_env():
    env = jinja2.Environment(
        loader=templates.get_template_loader(),
        autoescape=False,
        # aka please_stop_mangling_my_templates=True
        keep_trailing_newline=True
    )
    env.filters['tomlescape'] = toml.tomlescape
    env.filters['tomle'] = env.filters['tomlescape']
    env.filters['tomlvalue'] = toml.tomlvalue
    return env
