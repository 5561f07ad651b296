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

"""Variable ids. Entity arguments are 0-based array indices, t is the 1-based
model period; ids print every index 1-based."""

from milp import key


def production(i: int, p: int, t: int) -> str:
    return f"X_{key(i + 1, p + 1, t)}"


def running(i: int, p: int, t: int) -> str:
    return f"Y_{key(i + 1, p + 1, t)}"


def setup(i: int, p: int, t: int) -> str:
    return f"s_{key(i + 1, p + 1, t)}"


def start(i: int, p: int, t: int) -> str:
    return f"m_{key(i + 1, p + 1, t)}"


def load(p: int, t: int) -> str:
    return f"L_{key(p + 1, t)}"


def active(i: int, t: int) -> str:
    return f"sigma_{key(i + 1, t)}"


def ending(i: int, t: int) -> str:
    return f"e_{key(i + 1, t)}"


def drums(i: int, d: int, t: int) -> str:
    return f"Drum_{key(i + 1, d + 1, t)}"


def drum_flag(i: int, d: int, t: int) -> str:
    return f"delta_{key(i + 1, d + 1, t)}"


def inventory(a: int, t: int) -> str:
    return f"I_{key(a + 1, t)}"


def backorder(a: int, c: int, t: int) -> str:
    return f"B_{key(a + 1, c + 1, t)}"


def overstock(a: int, t: int) -> str:
    return f"OS_{key(a + 1, t)}"


def understock(a: int, t: int) -> str:
    return f"US_{key(a + 1, t)}"


def lot(i: int, t: int) -> str:
    return f"X_{key(i + 1, t)}"


def lot_running(i: int, t: int) -> str:
    return f"Y_{key(i + 1, t)}"


def lot_setup(i: int, t: int) -> str:
    return f"s_{key(i + 1, t)}"


def molds(i: int, t: int) -> str:
    return f"nu_{key(i + 1, t)}"


def excess(i: int, t: int) -> str:
    return f"dp_{key(i + 1, t)}"


def shortfall(i: int, t: int) -> str:
    return f"dm_{key(i + 1, t)}"
