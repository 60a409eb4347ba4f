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

import equilevel.dirs

def get_template_loader():
    return jinja2.ChoiceLoader([
        jinja2.FileSystemLoader([d + "/templates" for d in equilevel.dirs.config_search_path()]),
        jinja2.DictLoader({
            ## result.toml
            'result.toml': """# Generated by equilevel
kind = "{{ result.kind|tomle }}"
engine = "{{ result.engine|tomle }}"
found = {{ result.found|tomlvalue }}
indexing = "{{ result.indexing|tomle }}"
{%- if result.found %}
state = {{ result.state|tomlvalue }}
level = {{ result.level|tomlvalue }}
{%- endif %}
rounds = {{ result.rounds|tomlvalue }}
advancements = {{ result.advancements|tomlvalue }}
squarings = {{ result.squarings|tomlvalue }}

[extra]
{%- for key, value in result.extra.items() %}
{{ key }} = {{ value|tomlvalue }}
{%- endfor %}
""",
            ## verify.txt
            'verify.txt': """{{ report.kind }}: {{ report.rows|length }} engine(s) checked against the oracles
{%- if report.levels is not none %}
satisfying states: {{ report.satisfying }} at level(s) {{ report.levels|join(', ') or '-' }}
{%- endif %}
{% for row in report.rows -%}
{{ '%-14s'|format(row.engine) }} {{ '%-9s'|format('found' if row.found else 'not-found') }} {{ '%-7s'|format('rounds=' ~ row.rounds) }} {{ 'agree' if row.agrees else 'DISAGREE' }}
{%- for issue in row.issues %}
    {{ issue }}
{%- endfor %}
{% endfor -%}
{{ 'all engines agree' if report.agrees else 'disagreement found' }}
""",
        })
    ])
