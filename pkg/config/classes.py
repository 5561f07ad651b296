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

from dataclasses import dataclass, field, replace
from typing import Any

import numpy as np

from util import CustomException

from .const import (
    CALIBRATED_CLASS_WEIGHTS,
    CALIBRATED_OVERSTOCK_WEIGHT,
    CALIBRATED_UNDERSTOCK_WEIGHT,
    DEFAULT_ASSP_TIME_LIMIT,
    DEFAULT_FACTOR_LEVELS,
    DEFAULT_LSSP_TIME_LIMIT,
    DEFAULT_MIP_GAP,
    DEFAULT_POOL_SIZE,
    DEFAULT_THREADS,
    EMPHASIS_HINTS,
    FACTOR_NAMES,
)


@dataclass(frozen=True)
class ObjectiveWeights:
    """Lambda coefficients of the objective, one per demand class plus the
    overstock and understock terms."""

    classes: tuple[float, ...]
    overstock: float
    understock: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "classes", tuple(float(c) for c in self.classes))
        values = (*self.classes, self.overstock, self.understock)
        if len(self.classes) == 0:
            raise CustomException("invalid weights: need one weight per class")
        if any(value < 0 for value in values):
            raise CustomException(f"invalid weights: negative value in {values}")
        if not any(value > 0 for value in values):
            raise CustomException("invalid weights: all weights are zero")

    @classmethod
    def calibrated(cls, gamma: int = 3) -> "ObjectiveWeights":
        if gamma == len(CALIBRATED_CLASS_WEIGHTS):
            classes = CALIBRATED_CLASS_WEIGHTS
        elif gamma == 1:
            classes = CALIBRATED_CLASS_WEIGHTS[:1]
        else:
            classes = tuple(
                np.linspace(
                    CALIBRATED_CLASS_WEIGHTS[0], CALIBRATED_CLASS_WEIGHTS[-1], gamma
                ).tolist()
            )
        return cls(
            classes, CALIBRATED_OVERSTOCK_WEIGHT, CALIBRATED_UNDERSTOCK_WEIGHT
        )

    def scaled(self, factor: float) -> "ObjectiveWeights":
        return ObjectiveWeights(
            tuple(c * factor for c in self.classes),
            self.overstock * factor,
            self.understock * factor,
        )


@dataclass(frozen=True)
class FactorLevels:
    levels: dict = field(default_factory=lambda: dict(DEFAULT_FACTOR_LEVELS))

    def __post_init__(self) -> None:
        for name in FACTOR_NAMES:
            values = self.levels.get(name)
            if values is None or len(values) != 4:
                raise CustomException(f"invalid levels for '{name}': need 4 values")
            if len(set(values)) != 4:
                raise CustomException(f"invalid levels for '{name}': not distinct")

    def weights_for(self, row) -> ObjectiveWeights:
        """Weights of one orthogonal-array row given as 1-based level indices."""
        value = {
            name: float(self.levels[name][int(level) - 1])
            for name, level in zip(FACTOR_NAMES, row)
        }
        return ObjectiveWeights(
            (value["BC1"], value["BC2"], value["BC3"]), value["OS"], value["US"]
        )


@dataclass(frozen=True)
class SolverProfile:
    name: str
    kind: str
    command: str = ""
    file_format: str = "mps"
    parser: str = ""


@dataclass(frozen=True)
class SolverConfig:
    profile: SolverProfile = SolverProfile("highspy", "plugin")
    time_limit: float | None = None
    gap: float = DEFAULT_MIP_GAP
    emphasis: str = "balanced"
    threads: int = DEFAULT_THREADS
    workdir: str | None = None
    keep_files: bool = False

    def __post_init__(self) -> None:
        if self.time_limit is not None and self.time_limit <= 0:
            raise CustomException(f"invalid time limit: {self.time_limit}")
        if self.gap < 0:
            raise CustomException(f"invalid gap tolerance: {self.gap}")
        if self.emphasis not in EMPHASIS_HINTS:
            raise CustomException(f"invalid emphasis hint: {self.emphasis}")
        if self.threads < 1:
            raise CustomException(f"invalid thread count: {self.threads}")


@dataclass(frozen=True)
class RunConfig:
    lssp_time_limit: float = DEFAULT_LSSP_TIME_LIMIT
    assp_time_limit: float = DEFAULT_ASSP_TIME_LIMIT
    pool_size: int = DEFAULT_POOL_SIZE
    threshold: float = 0.0
    relative_tolerance: float = 0.0
    emphasis: str = "balanced"
    profile: SolverProfile = SolverProfile("highspy", "plugin")
    gap: float = DEFAULT_MIP_GAP
    threads: int = DEFAULT_THREADS
    workers: int = 1
    compact: bool = True
    weights: ObjectiveWeights | None = None
    frozen_macros: int = 0
    frozen_plan: Any = None

    def __post_init__(self) -> None:
        for limit in (self.lssp_time_limit, self.assp_time_limit):
            if limit <= 0:
                raise CustomException(f"invalid time limit: {limit}")
        if self.pool_size < 1:
            raise CustomException(f"invalid pool size: {self.pool_size}")
        if self.threshold < 0 or self.relative_tolerance < 0:
            raise CustomException("invalid acceptance threshold: must be >= 0")
        if self.workers < 1:
            raise CustomException(f"invalid worker count: {self.workers}")
        if self.frozen_macros < 0:
            raise CustomException(f"invalid frozen macro count: {self.frozen_macros}")
        if self.frozen_macros > 0 and self.frozen_plan is None:
            raise CustomException("frozen macro-periods need a frozen plan")

    def lssp_solver(self) -> SolverConfig:
        return SolverConfig(
            self.profile, self.lssp_time_limit, self.gap, self.emphasis, self.threads
        )

    def assp_solver(self) -> SolverConfig:
        return SolverConfig(
            self.profile, self.assp_time_limit, self.gap, self.emphasis, self.threads
        )

    def with_weights(self, weights: ObjectiveWeights) -> "RunConfig":
        return replace(self, weights=weights)


@dataclass(frozen=True)
class ScenarioSpec:
    name: str
    items: tuple[int, ...] = ()
    presses: tuple[int, ...] | None = None


@dataclass(frozen=True)
class InventoryConfig:
    name: str
    multiplier: float
