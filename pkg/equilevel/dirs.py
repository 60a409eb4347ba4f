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

"""This module handles equilevel's config directories.

They're based on XDG dirs, suffixed with ``/equilevel``.

Attributes:
    CONFIG_HOME (str): equilevel config home.
    CONFIG_DIRS (list of str): Additional equilevel config dirs.
"""

import os

# need to check for unset or empty, ``.get`` only handles unset.

CONFIG_HOME = os.environ.get('XDG_CONFIG_HOME', '')
if not CONFIG_HOME:
    CONFIG_HOME = os.path.expanduser('~') + '/.config'
CONFIG_HOME = CONFIG_HOME + "/equilevel"

CONFIG_DIRS = os.environ.get('XDG_CONFIG_DIRS', '')
if not CONFIG_DIRS:
    CONFIG_DIRS = '/etc/xdg'
CONFIG_DIRS = [config_dir + "/equilevel" for config_dir in CONFIG_DIRS.split(':') if config_dir]

def config_search_path():
    """Returns every config dir, most specific first.
    """
    return [CONFIG_HOME] + CONFIG_DIRS
