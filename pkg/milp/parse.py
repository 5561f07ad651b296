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

"""Readers for the solution files of command-line solvers."""

import re
from dataclasses import dataclass, field

from util import SolverAdapterError

OPTIMAL = "optimal"
FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
TIME_LIMIT = "time_limit"
ERROR = "error"
STATUSES = (OPTIMAL, FEASIBLE, INFEASIBLE, TIME_LIMIT, ERROR)
WITH_VALUES = (OPTIMAL, FEASIBLE, TIME_LIMIT)


@dataclass
class ParsedSolution:
    status: str
    objective: float | None = None
    values: dict[str, float] = field(default_factory=dict)
    message: str = ""


def _number(text: str, context: str) -> float:
    try:
        return float(text)
    except ValueError as error:
        raise SolverAdapterError(f"cannot read number '{text}' in {context}") from error


def parse_cbc(text: str) -> ParsedSolution:
    lines = text.splitlines()
    if not lines:
        raise SolverAdapterError("empty CBC solution file")
    header = lines[0].strip()
    objective = None
    if match := re.search(r"objective value\s+(\S+)", header):
        objective = _number(match.group(1), "CBC header")

    if header.startswith("Optimal"):
        status = OPTIMAL
    elif "infeasible" in header.lower() and not header.startswith("Stopped"):
        status = INFEASIBLE
    elif header.startswith("Stopped"):
        if "no integer solution" in header:
            status = ERROR
        elif "on time" in header:
            status = TIME_LIMIT
        else:
            status = FEASIBLE
    else:
        status = ERROR

    values = {}
    if status in WITH_VALUES:
        for number, line in enumerate(lines[1:], start=2):
            fields = line.replace("**", " ").split()
            if not fields:
                continue
            if len(fields) < 3:
                raise SolverAdapterError(f"CBC solution line {number} is malformed: {line!r}")
            values[fields[1]] = _number(fields[2], f"CBC solution line {number}")
    return ParsedSolution(status, objective, values, header)


_HIGHS_STATUS = {
    "optimal": OPTIMAL,
    "infeasible": INFEASIBLE,
    "primal infeasible or unbounded": INFEASIBLE,
    "model empty": OPTIMAL,
    "time limit reached": TIME_LIMIT,
    "iteration limit reached": FEASIBLE,
    "solution limit reached": FEASIBLE,
}


def parse_highs(text: str) -> ParsedSolution:
    lines = [line.strip() for line in text.splitlines()]
    try:
        message = lines[lines.index("Model status") + 1]
    except (ValueError, IndexError) as error:
        raise SolverAdapterError("HiGHS solution file has no model status") from error
    status = _HIGHS_STATUS.get(message.lower(), ERROR)

    objective = None
    values = {}
    feasible = False
    if "# Primal solution values" in lines:
        start = lines.index("# Primal solution values")
        feasible = start + 1 < len(lines) and lines[start + 1] == "Feasible"
        for line in lines[start + 1 :]:
            if line.startswith("Objective"):
                objective = _number(line.split()[1], "HiGHS objective")
            if line.startswith("# Columns"):
                count = int(line.split()[2])
                begin = lines.index(line, start) + 1
                for number, entry in enumerate(lines[begin : begin + count], start=begin + 1):
                    fields = entry.split()
                    if len(fields) != 2:
                        raise SolverAdapterError(
                            f"HiGHS solution line {number} is malformed: {entry!r}"
                        )
                    values[fields[0]] = _number(fields[1], f"HiGHS solution line {number}")
                break

    if status in (TIME_LIMIT, FEASIBLE) and not feasible:
        status = ERROR
    if status not in WITH_VALUES:
        values = {}
    return ParsedSolution(status, objective, values, message)


PARSERS = {"cbc": parse_cbc, "highs": parse_highs}
