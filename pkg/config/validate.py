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


def is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def is_non_negative(value) -> bool:
    return is_number(value) and value >= 0


def is_positive(value) -> bool:
    return is_number(value) and value > 0


def is_index_list(values, upper: int | None = None) -> bool:
    if not isinstance(values, list):
        return False

    for value in values:
        if not isinstance(value, int) or isinstance(value, bool):
            return False
        if value < 0 or (upper is not None and value >= upper):
            return False

    return True
