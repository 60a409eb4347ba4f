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

_tomletrans = str.maketrans({
    **{c: '\\u{:04X}'.format(c) for c in range(32)},
    8: '\\b', 9: '\\t', 10: '\\n', 12: '\\f', 13: '\\r',
    127: '\\u007F', '"': '\\"', '\\': '\\\\',
})

def tomlescape(value):
    """Escapes a string for use in a TOML string.

    Returns:
        str: The escaped string.
    """
    return value.translate(_tomletrans)

def tomlvalue(value):
    """Formats a result value as a TOML value.

    Handles booleans, integers, strings and (nested) lists or tuples of
    those.

    Raises:
        TypeError: For anything else.
    """
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return '"' + tomlescape(value) + '"'
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(tomlvalue(v) for v in value) + ']'
    raise TypeError("no TOML form for {!r}".format(value))
