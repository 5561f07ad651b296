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

"""Solver-independent mixed-integer linear models.

A model is an ordered set of typed variables, a list of tagged linear rows and
a minimisation objective. Models are immutable once built; ModelBuilder
accumulates them.
"""

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from util import ModelStructureError, warn

BINARY = "binary"
INTEGER = "integer"
CONTINUOUS = "continuous"
KINDS = (BINARY, INTEGER, CONTINUOUS)

LE = "<="
GE = ">="
EQ = "="
SENSES = (LE, GE, EQ)

CONSTANT_ID = "const_one"
FEASIBILITY_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Variable:
    id: str
    kind: str = CONTINUOUS
    lower: float = 0.0
    upper: float = math.inf

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ModelStructureError(f"variable {self.id}: unknown kind '{self.kind}'")
        if math.isnan(self.lower) or math.isnan(self.upper) or self.lower > self.upper:
            raise ModelStructureError(
                f"variable {self.id}: bounds [{self.lower}, {self.upper}] are empty"
            )
        if self.kind == BINARY and (self.lower < 0 or self.upper > 1):
            raise ModelStructureError(f"variable {self.id}: binary bounds outside [0, 1]")

    @property
    def is_integral(self) -> bool:
        return self.kind != CONTINUOUS


@dataclass(frozen=True)
class LinearConstraint:
    name: str
    terms: tuple[tuple[str, float], ...]
    sense: str
    rhs: float
    tag: str

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "terms", tuple((str(v), float(c)) for v, c in self.terms)
        )
        if self.sense not in SENSES:
            raise ModelStructureError(f"row {self.name}: unknown sense '{self.sense}'")
        if not self.terms:
            raise ModelStructureError(f"row {self.name}: no terms")
        ids = [variable for variable, _ in self.terms]
        if len(set(ids)) != len(ids):
            raise ModelStructureError(f"row {self.name}: duplicate variable in terms")
        if not all(math.isfinite(c) for _, c in self.terms) or not math.isfinite(self.rhs):
            raise ModelStructureError(f"row {self.name}: non-finite coefficient")


@dataclass(frozen=True)
class MilpModel:
    name: str
    variables: tuple[Variable, ...] = ()
    constraints: tuple[LinearConstraint, ...] = ()
    objective: tuple[tuple[str, float], ...] = ()

    @cached_property
    def index(self) -> dict[str, int]:
        return {variable.id: k for k, variable in enumerate(self.variables)}

    def variable(self, id: str) -> Variable:
        return self.variables[self.index[id]]

    def has(self, id: str) -> bool:
        return id in self.index

    def check(self) -> "MilpModel":
        if len(self.index) != len(self.variables):
            seen = Counter(variable.id for variable in self.variables)
            duplicate = next(id for id, count in seen.items() if count > 1)
            raise ModelStructureError(f"variable {duplicate} declared twice")
        names = set()
        for row in self.constraints:
            if row.name in names:
                raise ModelStructureError(f"row {row.name} declared twice")
            names.add(row.name)
            for id, _ in row.terms:
                if id not in self.index:
                    raise ModelStructureError(f"row {row.name} references unknown {id}")
        for id, _ in self.objective:
            if id not in self.index:
                raise ModelStructureError(f"objective references unknown {id}")
        return self

    def with_constraints(self, extra: Iterable[LinearConstraint]) -> "MilpModel":
        return MilpModel(
            self.name, self.variables, self.constraints + tuple(extra), self.objective
        ).check()


class LinExpr:
    """Mutable linear expression: coefficients by variable id plus a constant."""

    def __init__(self) -> None:
        self.coefs: dict[str, float] = {}
        self.constant = 0.0

    def add(self, id: str, coef: float = 1.0) -> "LinExpr":
        self.coefs[id] = self.coefs.get(id, 0.0) + coef
        return self

    def add_constant(self, value: float) -> "LinExpr":
        self.constant += value
        return self

    def terms(self) -> tuple[tuple[str, float], ...]:
        return tuple((id, c) for id, c in self.coefs.items() if c != 0.0)


def key(*indices: int) -> str:
    return "_".join(str(k) for k in indices)


def _holds(value: float, sense: str, rhs: float) -> bool:
    if sense == LE:
        return value <= rhs + FEASIBILITY_TOLERANCE
    if sense == GE:
        return value >= rhs - FEASIBILITY_TOLERANCE
    return abs(value - rhs) <= FEASIBILITY_TOLERANCE


class ModelBuilder:
    def __init__(self, name: str) -> None:
        self.name = name
        self.__variables: dict[str, Variable] = {}
        self.__constraints: list[LinearConstraint] = []
        self.__objective: dict[str, float] = {}

    def add_variable(
        self, id: str, kind: str = CONTINUOUS, lower: float = 0.0, upper: float = math.inf
    ) -> str:
        if id in self.__variables:
            raise ModelStructureError(f"variable {id} declared twice")
        self.__variables[id] = Variable(id, kind, float(lower), float(upper))
        return id

    def binary(self, id: str) -> str:
        return self.add_variable(id, BINARY, 0.0, 1.0)

    def integer(self, id: str, lower: float = 0.0, upper: float = math.inf) -> str:
        return self.add_variable(id, INTEGER, lower, upper)

    def continuous(self, id: str, lower: float = 0.0, upper: float = math.inf) -> str:
        return self.add_variable(id, CONTINUOUS, lower, upper)

    def has(self, id: str) -> bool:
        return id in self.__variables

    def add_row(
        self, tag: str, suffix: str, expr: LinExpr, sense: str, rhs: float
    ) -> LinearConstraint | None:
        """Add expr <sense> rhs; the expression constant moves to the right side.

        A row left without variables is dropped when it holds and otherwise
        becomes an explicit infeasible row on a variable fixed to one.
        """
        name = f"{tag}_{suffix}" if suffix else tag
        rhs = float(rhs) - expr.constant
        terms = expr.terms()
        if not terms:
            if _holds(0.0, sense, rhs):
                return None
            warn(f"model {self.name}: row {name} cannot hold ({sense} {rhs})")
            if not self.has(CONSTANT_ID):
                self.add_variable(CONSTANT_ID, CONTINUOUS, 1.0, 1.0)
            terms = ((CONSTANT_ID, 0.0),)
        row = LinearConstraint(name, terms, sense, rhs, tag)
        self.__constraints.append(row)
        return row

    def minimize(self, id: str, coef: float) -> None:
        if coef != 0.0:
            self.__objective[id] = self.__objective.get(id, 0.0) + coef

    def build(self) -> MilpModel:
        return MilpModel(
            self.name,
            tuple(self.__variables.values()),
            tuple(self.__constraints),
            tuple(self.__objective.items()),
        ).check()


@dataclass(frozen=True)
class ModelSize:
    binaries: int = 0
    integers: int = 0
    constraints: int = 0
    continuous: int = field(default=0, compare=False)


def model_size(model: MilpModel) -> ModelSize:
    kinds = Counter(variable.kind for variable in model.variables)
    return ModelSize(
        kinds[BINARY], kinds[INTEGER], len(model.constraints), kinds[CONTINUOUS]
    )


def constraint_counts(model: MilpModel) -> dict[str, int]:
    counts: dict[str, int] = {}
    for row in model.constraints:
        counts[row.tag] = counts.get(row.tag, 0) + 1
    return counts


def table_one(kind: str, N: int, P: int, T: int, W: int) -> ModelSize:
    """Published closed-form sizes of the three models on dense instances.

    The variable counts agree with the builds; the row counts are coarser
    than the builds, see dense_size for the exact ones.
    """
    NPT, NT, PT = N * P * T, N * T, P * T
    if kind == "integrated":
        return ModelSize(
            4 * NPT + 2 * NT, 2 * NPT + 3 * NT, 21 * NPT + 10 * NT + 2 * PT + 5 * T + W + 4
        )
    if kind == "lssp":
        return ModelSize(NPT + 6 * NT, NPT + 4 * NT, 3 * NPT + 15 * NT + PT + 4 * T + W + 4)
    if kind == "assp":
        return ModelSize(4 * NPT + 2 * NT, 2 * NPT, 21 * NPT + 3 * NT + 2 * PT + 5 * T + W + 4)
    raise ModelStructureError(f"unknown model kind '{kind}'")


def dense_size(
    kind: str, N: int, P: int, T: int, W: int, H: int = 1, gamma: int = 3
) -> ModelSize:
    """Exact sizes of the literal builds on dense instances.

    Dense means one item per tire, every press eligible and available, one
    drum type per press with every yield defined, and no enforced, quality
    or day-off rows. Rows per family:

    - press rows per (i, p, t): eq10, eq11, eq14, eq15, eq17, eq38, eq40,
      eq42, eq44 and the seven drum rows
    - per (i, t): eq13, eq24, eq25, eq27, and the inventory block with
      eq6, eq7, os, us plus gamma - 1 rows each of eq8 and eq9
    - per (p, t): eq12 and the drum count eq30
    - per t: eq18, eq22, eq23, eq26
    - per macro-period: eq19, eq20, eq21, eq28 and eq29 per workshop

    The lot-sizing model has eq51 to eq55, eq27 and its inventory block per
    (i, t), the seven drum rows per (i, d, t), eq30 per (d, t), eq57, eq61,
    eq62 and eq63 per t, and eq58, eq59, eq60, eq28 and eq64 per workshop
    per macro-period. The assignment model adds eq71 per (i, t) to the
    press rows and has no inventory block.
    """
    NPT, NT, PT = N * P * T, N * T, P * T
    inventory_rows = (2 * gamma + 2) * NT
    macro_rows = (4 + W) * H
    if kind == "integrated":
        return ModelSize(
            4 * NPT + 2 * NT,
            2 * NPT + gamma * NT,
            16 * NPT + 4 * NT + inventory_rows + 2 * PT + 4 * T + macro_rows,
        )
    if kind == "assp":
        return ModelSize(
            4 * NPT + 2 * NT, 2 * NPT, 16 * NPT + 5 * NT + 2 * PT + 4 * T + macro_rows
        )
    if kind == "lssp":
        return ModelSize(
            NPT + 3 * NT,
            NPT + (1 + gamma) * NT,
            7 * NPT + 6 * NT + inventory_rows + PT + 4 * T + macro_rows,
        )
    raise ModelStructureError(f"unknown model kind '{kind}'")
