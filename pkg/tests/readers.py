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

"""Minimal LP and MPS readers, independent of the exporters, that recover
what a solver would see: rows, columns and their integrality."""

from dataclasses import dataclass, field


@dataclass
class ReadModel:
    rows: dict[str, str] = field(default_factory=dict)
    columns: set[str] = field(default_factory=set)
    integers: set[str] = field(default_factory=set)
    binaries: set[str] = field(default_factory=set)
    coefficients: dict[tuple[str, str], float] = field(default_factory=dict)
    rhs: dict[str, float] = field(default_factory=dict)
    upper: dict[str, float] = field(default_factory=dict)


def _lp_terms(tokens: list[str], row: str, model: ReadModel) -> None:
    sign = 1.0
    value = None
    for token in tokens:
        if token in ("+", "-"):
            sign = 1.0 if token == "+" else -1.0
        elif value is None:
            value = float(token)
        else:
            model.columns.add(token)
            model.coefficients[(row, token)] = sign * value
            sign, value = 1.0, None


def read_lp(text: str) -> ReadModel:
    model = ReadModel()
    section = None
    statement: list[str] = []

    def flush():
        if not statement:
            return
        head, _, rest = " ".join(statement).partition(":")
        tokens = rest.split()
        if section == "constraints":
            sense, rhs = tokens[-2], float(tokens[-1])
            model.rows[head.strip()] = sense
            model.rhs[head.strip()] = rhs
            _lp_terms(tokens[:-2], head.strip(), model)
        else:
            _lp_terms(tokens, "obj", model)
        statement.clear()

    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("\\"):
            continue
        keyword = stripped.lower()
        if keyword in ("minimize", "subject to", "bounds", "general", "binary", "end"):
            flush()
            section = {"minimize": "objective", "subject to": "constraints"}.get(keyword, keyword)
            continue
        if section in ("objective", "constraints"):
            if line.startswith("   ") and statement:
                statement.append(stripped)
            else:
                flush()
                statement.append(stripped)
        elif section == "general":
            model.integers.add(stripped)
        elif section == "binary":
            model.binaries.add(stripped)
            model.columns.add(stripped)
        elif section == "bounds":
            tokens = stripped.split()
            if len(tokens) == 5:
                model.upper[tokens[2]] = float(tokens[4])
    flush()
    return model


def read_mps(text: str) -> ReadModel:
    model = ReadModel()
    section = None
    integral = False
    integral_columns = set()
    for line in text.splitlines():
        if not line.strip():
            continue
        if not line.startswith(" "):
            section = line.split()[0]
            continue
        fields = line.split()
        if section == "ROWS":
            if fields[0] != "N":
                model.rows[fields[1]] = {"L": "<=", "G": ">=", "E": "="}[fields[0]]
        elif section == "COLUMNS":
            if fields[1] == "'MARKER'":
                integral = fields[2] == "'INTORG'"
                continue
            column = fields[0]
            model.columns.add(column)
            if integral:
                integral_columns.add(column)
            for row, value in zip(fields[1::2], fields[2::2]):
                if row in model.rows:
                    model.coefficients[(row, column)] = float(value)
        elif section == "RHS":
            for row, value in zip(fields[1::2], fields[2::2]):
                model.rhs[row] = float(value)
        elif section == "BOUNDS":
            if fields[0] in ("UP", "FX"):
                model.upper[fields[2]] = float(fields[3])

    for column in integral_columns:
        if model.upper.get(column) == 1.0:
            model.binaries.add(column)
        else:
            model.integers.add(column)
    return model
