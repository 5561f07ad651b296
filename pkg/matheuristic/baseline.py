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

"""Greedy earliest-due-date plan used as a comparison baseline.

Period by period, tires are served in order of the first period their stock
runs out within a look-ahead window. Each takes free eligible presses up to
its mold count until its net requirement is covered. Flexibility caps,
tonnage windows and upstream capacities are ignored.
"""

import numpy as np

from evaluator import PlanSolution, plan_from_production, stock_deviations
from instance import Instance


def _due_dates(instance: Instance, position: np.ndarray, t: int, lookahead: int):
    """(due period, requirement) per tire that runs short within the window."""
    window = instance.demand[:, :, t : t + lookahead].sum(axis=1)
    cumulative = np.cumsum(window, axis=1)
    due = {}
    for a in range(instance.A):
        short = np.flatnonzero(position[a] - cumulative[a] < 0)
        if short.size:
            due[a] = (t + int(short[0]), int(cumulative[a, -1] - position[a]))
    return due


def greedy_plan(instance: Instance, lookahead: int | None = None) -> PlanSolution:
    lookahead = lookahead or instance.calendar.periods_per_macro
    N, P, T = instance.N, instance.P, instance.T
    production = np.zeros((N, P, T), dtype=np.int64)
    running = np.zeros((N, P, T), dtype=np.int64)
    eligible = instance.item_eligibility()
    # stock net of backorders, may be negative
    position = (instance.initial_inventory - instance.initial_backorder.sum(axis=1)).astype(
        np.int64
    )

    for t in range(T):
        free = instance.maintenance[:, t] == 1
        used = np.zeros(instance.A, dtype=np.int64)
        for i, p in np.argwhere(instance.enforced[:, :, t] == 1):
            if free[p]:
                running[i, p, t] = 1
                production[i, p, t] = instance.rate[i, t]
                free[p] = False
                used[instance.item_tire[i]] += 1

        supplied = np.zeros(instance.A, dtype=np.int64)
        for a in range(instance.A):
            supplied[a] = production[instance.tire_items(a), :, t].sum()
        due = _due_dates(instance, position + supplied, t, lookahead)

        for a, (_, need) in sorted(due.items(), key=lambda entry: (entry[1][0], entry[0])):
            items = sorted(instance.tire_items(a), key=lambda i: -instance.rate[i, t])
            for i in items:
                rate = int(instance.rate[i, t])
                if rate <= 0:
                    continue
                for p in np.flatnonzero(free & (eligible[i] == 1)):
                    if need <= 0 or used[a] >= instance.molds[a]:
                        break
                    running[i, p, t] = 1
                    production[i, p, t] = rate
                    free[p] = False
                    used[a] += 1
                    need -= rate

        for a in range(instance.A):
            made = production[instance.tire_items(a), :, t].sum()
            position[a] += made - instance.demand[a, :, t].sum()

    plan = plan_from_production(instance, production, running)
    overstock, understock = stock_deviations(instance, plan.inventory)
    return PlanSolution(
        plan.production, plan.running, plan.inventory, plan.backorder, overstock, understock
    )
