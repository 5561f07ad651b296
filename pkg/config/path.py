# Copyright © 2026 VulcanPlan contributors

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

from os import path, getenv, name

from .const import PROFILE_ENV_VAR


def get_profile_path():
    if override := getenv(PROFILE_ENV_VAR):
        return override
    if name == "nt":
        return path.join(getenv("APPDATA", ""), "VulcanPlan", "solvers.yml")
    xdg_config_home = getenv("XDG_CONFIG_HOME", path.expanduser("~/.config"))
    return path.join(xdg_config_home, "VulcanPlan", "solvers.yml")
