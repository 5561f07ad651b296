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

import sys

from termcolor import colored

_verbose = True


def set_verbose(verbose: bool) -> None:
    global _verbose  # pylint: disable=global-statement
    _verbose = verbose


def log(message: str, color="green") -> None:
    # green lines are progress and can be silenced, warnings and errors cannot
    if color == "green" and not _verbose:
        return
    print(colored("[*] {}".format(message), color), file=sys.stderr)  # pyright: ignore


def warn(message: str) -> None:
    log(message, color="yellow")


def error(message: str) -> None:
    log(message, color="red")
