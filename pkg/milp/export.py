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

import base64
import hashlib
import json
import math
from dataclasses import dataclass, field

from util import ModelStructureError

from .model import BINARY, EQ, GE, LE, MilpModel

MPS_NAME_LENGTH = 8
MPS_NUMBER_LENGTH = 12
LP_TERMS_PER_LINE = 8
OBJECTIVE_ROW = "OBJ"


def _lp_number(value: float) -> str:
    if value == math.inf:
        return "+inf"
    if value == -math.inf:
        return "-inf"
    text = repr(float(value))
    return text[:-2] if text.endswith(".0") else text


def _mps_number(value: float) -> str:
    value = float(value)
    if value.is_integer() and abs(value) < 1e12:
        return str(int(value))
    text = repr(value)
    if len(text) <= MPS_NUMBER_LENGTH:
        return text
    for digits in range(MPS_NUMBER_LENGTH, 0, -1):
        text = f"{value:.{digits}g}"
        if len(text) <= MPS_NUMBER_LENGTH:
            return text
    raise ModelStructureError(f"number {value} does not fit an MPS field")


def _lp_terms(terms) -> str:
    parts = [
        f"{'-' if c < 0 else '+'} {_lp_number(abs(c))} {id}" for id, c in terms
    ]
    lines = [
        " ".join(parts[k : k + LP_TERMS_PER_LINE])
        for k in range(0, len(parts), LP_TERMS_PER_LINE)
    ]
    return "\n   ".join(lines)


def _is_plain_binary(variable) -> bool:
    return variable.kind == BINARY and variable.lower == 0.0 and variable.upper == 1.0


def export_lp(model: MilpModel) -> str:
    model.check()
    lines = [f"\\ {model.name}", "Minimize"]
    if model.objective:
        lines.append(f" obj: {_lp_terms(model.objective)}")
    elif model.variables:
        lines.append(f" obj: + 0 {model.variables[0].id}")
    else:
        lines.append(" obj:")

    lines.append("Subject To")
    for row in model.constraints:
        lines.append(f" {row.name}: {_lp_terms(row.terms)} {row.sense} {_lp_number(row.rhs)}")

    bounds = []
    for variable in model.variables:
        if _is_plain_binary(variable):
            continue
        lower, upper = variable.lower, variable.upper
        if lower == upper:
            bounds.append(f" {variable.id} = {_lp_number(lower)}")
        elif lower == -math.inf and upper == math.inf:
            bounds.append(f" {variable.id} free")
        elif lower != 0.0 or upper != math.inf:
            bounds.append(f" {_lp_number(lower)} <= {variable.id} <= {_lp_number(upper)}")
    if bounds:
        lines.append("Bounds")
        lines.extend(bounds)

    general = [v.id for v in model.variables if v.is_integral and not _is_plain_binary(v)]
    binary = [v.id for v in model.variables if _is_plain_binary(v)]
    if general:
        lines.append("General")
        lines.extend(f" {id}" for id in general)
    if binary:
        lines.append("Binary")
        lines.extend(f" {id}" for id in binary)
    lines.append("End")
    return "\n".join(lines) + "\n"


@dataclass
class NameMap:
    columns: dict[str, str] = field(default_factory=dict)
    rows: dict[str, str] = field(default_factory=dict)

    @property
    def hashed(self) -> bool:
        return any(k != v for k, v in self.columns.items()) or any(
            k != v for k, v in self.rows.items()
        )

    def original_columns(self) -> dict[str, str]:
        return {short: name for name, short in self.columns.items()}

    def to_json(self) -> str:
        hashed = {
            "columns": {s: n for n, s in self.columns.items() if s != n},
            "rows": {s: n for n, s in self.rows.items() if s != n},
        }
        return json.dumps(hashed, indent=1, sort_keys=True) + "\n"


def _short(name: str, prefix: str, used: set[str]) -> str:
    if len(name) <= MPS_NAME_LENGTH and name not in used and name != OBJECTIVE_ROW:
        return name
    salt = 0
    while True:
        seed = name if salt == 0 else f"{name}#{salt}"
        digest = hashlib.blake2b(seed.encode("utf-8"), digest_size=5).digest()
        short = prefix + base64.b32encode(digest).decode("ascii")[: MPS_NAME_LENGTH - 1]
        if short not in used:
            return short
        salt += 1


def mps_names(model: MilpModel) -> NameMap:
    names = NameMap()
    used: set[str] = set()
    for variable in model.variables:
        names.columns[variable.id] = short = _short(variable.id, "C", used)
        used.add(short)
    used = set()
    for row in model.constraints:
        names.rows[row.name] = short = _short(row.name, "R", used)
        used.add(short)
    return names


def _field_line(f1: str = "", f2: str = "", f3: str = "", f4: str = "") -> str:
    return f" {f1:<2} {f2:<8}  {f3:<8}  {f4:<12}".rstrip()


def export_mps(model: MilpModel, names: NameMap | None = None) -> str:
    model.check()
    names = names or mps_names(model)
    row_type = {LE: "L", GE: "G", EQ: "E"}

    lines = [f"NAME          {model.name[:MPS_NAME_LENGTH]}", "ROWS", _field_line("N", OBJECTIVE_ROW)]
    for row in model.constraints:
        lines.append(_field_line(row_type[row.sense], names.rows[row.name]))

    entries: dict[str, list[tuple[str, float]]] = {v.id: [] for v in model.variables}
    objective = dict(model.objective)
    for row in model.constraints:
        for id, c in row.terms:
            entries[id].append((names.rows[row.name], c))

    lines.append("COLUMNS")
    integral = False
    markers = 0
    for variable in model.variables:
        if variable.is_integral != integral:
            marker = "'INTORG'" if variable.is_integral else "'INTEND'"
            lines.append(_field_line("", f"M{markers:07d}", "'MARKER'", marker))
            markers += 1
            integral = variable.is_integral
        column = names.columns[variable.id]
        lines.append(
            _field_line("", column, OBJECTIVE_ROW, _mps_number(objective.get(variable.id, 0.0)))
        )
        for row, c in entries[variable.id]:
            lines.append(_field_line("", column, row, _mps_number(c)))
    if integral:
        lines.append(_field_line("", f"M{markers:07d}", "'MARKER'", "'INTEND'"))

    lines.append("RHS")
    for row in model.constraints:
        if row.rhs != 0.0:
            lines.append(_field_line("", "RHS", names.rows[row.name], _mps_number(row.rhs)))

    lines.append("BOUNDS")
    for variable in model.variables:
        column = names.columns[variable.id]
        lower, upper = variable.lower, variable.upper
        if lower == upper:
            lines.append(_field_line("FX", "BND", column, _mps_number(lower)))
            continue
        if lower == -math.inf and upper == math.inf:
            lines.append(_field_line("FR", "BND", column))
            continue
        if lower == -math.inf:
            lines.append(_field_line("MI", "BND", column))
        elif lower != 0.0:
            lines.append(_field_line("LO", "BND", column, _mps_number(lower)))
        if upper != math.inf:
            lines.append(_field_line("UP", "BND", column, _mps_number(upper)))
        elif variable.is_integral:
            lines.append(_field_line("PL", "BND", column))
    lines.append("ENDATA")
    return "\n".join(lines) + "\n"


def write_model(model: MilpModel, path: str, file_format: str = "mps") -> NameMap:
    """Write the model and, for MPS with shortened names, a sidecar name map."""
    if file_format == "lp":
        with open(path, "w", encoding="utf-8") as writer:
            writer.write(export_lp(model))
        return NameMap({v.id: v.id for v in model.variables}, {r.name: r.name for r in model.constraints})
    if file_format != "mps":
        raise ModelStructureError(f"unknown model file format '{file_format}'")
    names = mps_names(model)
    with open(path, "w", encoding="utf-8") as writer:
        writer.write(export_mps(model, names))
    if names.hashed:
        with open(path + ".names.json", "w", encoding="utf-8") as writer:
            writer.write(names.to_json())
    return names
