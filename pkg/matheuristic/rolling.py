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

"""Rolling horizon over the macro-periods of an instance.

Each week starts from the inventory, backorders and running history the
previous week ended with.
"""

from dataclasses import dataclass, field

import numpy as np

from config import RunConfig
from evaluator import PlanSolution, concatenate_plans, plan_from_production, stock_deviations
from instance import Instance, ensure_valid, roll_warm_state, slice_macro, with_initial_state
from util import DimensionError, WeekFailure, log

from .week import WeekResult, solve_week


@dataclass
class RollingResult:
    plan: PlanSolution | None = None
    weeks: list[WeekResult] = field(default_factory=list)

    @property
    def degraded(self) -> bool:
        return any(week.degraded for week in self.weeks)


def _frozen_week(week: Instance, config: RunConfig, h: int) -> WeekResult:
    frozen = config.frozen_plan
    ppm = week.calendar.periods_per_macro
    if frozen.T < (h + 1) * ppm:
        raise DimensionError(f"frozen plan covers {frozen.T} periods, needs {(h + 1) * ppm}")
    part = frozen.periods(h * ppm, (h + 1) * ppm)
    plan = plan_from_production(week, part.production, part.running)
    overstock, understock = stock_deviations(week, plan.inventory)
    plan = PlanSolution(
        plan.production, plan.running, plan.inventory, plan.backorder, overstock, understock
    )
    log(f"macro-period {h + 1}: frozen plan")
    return WeekResult(h, 0, None, 0.0, plan, frozen=True)


def run_rolling_horizon(instance: Instance, config: RunConfig) -> RollingResult:
    ensure_valid(instance)
    if instance.H == 0:
        raise DimensionError("the calendar holds no macro-period")
    result = RollingResult()
    plans: list[PlanSolution] = []
    inventory, backorder = instance.initial_inventory, instance.initial_backorder
    warm = instance.warm_state

    for h in range(instance.H):
        week = with_initial_state(slice_macro(instance, h), inventory, backorder, warm)
        try:
            if h < config.frozen_macros:
                outcome = _frozen_week(week, config, h)
            else:
                outcome = solve_week(week, config, macro=h)
        except WeekFailure as failure:
            failure.results = list(result.weeks)
            failure.plan = concatenate_plans(plans) if plans else None
            raise

        result.weeks.append(outcome)
        plans.append(outcome.plan)
        inventory = outcome.plan.inventory[:, -1]
        backorder = outcome.plan.backorder[:, :, -1]
        warm = roll_warm_state(week, outcome.plan.running, outcome.plan.molds)

    result.plan = concatenate_plans(plans)
    log(f"rolling horizon done: {instance.H} macro-period(s), {int(np.sum(result.plan.production))} tires")
    return result
