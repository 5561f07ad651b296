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

"""Plan audit by direct arithmetic, independent of the model builders.

Each breached row is reported under the tag of its model family, with its
indices printed 1-based like the model row names.
"""

from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from config import DEFAULT_VIOLATION_CAP
from instance import Instance, Timeline

from .indicators import Indicators, derive
from .plan import PlanSolution

TOLERANCE = 1e-6


@dataclass(frozen=True)
class Violation:
    tag: str
    index: tuple[int, ...]
    lhs: float
    sense: str
    rhs: float

    def __str__(self) -> str:
        where = ",".join(str(k) for k in self.index)
        return f"{self.tag}[{where}]: {self.lhs:g} {self.sense} {self.rhs:g} does not hold"


@dataclass
class Audit:
    cap: int = DEFAULT_VIOLATION_CAP
    violations: list[Violation] = field(default_factory=list)
    total: int = 0

    @property
    def feasible(self) -> bool:
        return self.total == 0

    @property
    def truncated(self) -> bool:
        return self.total > len(self.violations)

    def tags(self) -> set[str]:
        return {violation.tag for violation in self.violations}

    def check(self, tag: str, index: tuple, lhs: float, sense: str, rhs: float) -> None:
        lhs, rhs = float(lhs), float(rhs)
        if sense == "<=":
            holds = lhs <= rhs + TOLERANCE
        elif sense == ">=":
            holds = lhs >= rhs - TOLERANCE
        else:
            holds = abs(lhs - rhs) <= TOLERANCE
        if holds:
            return
        self.total += 1
        if len(self.violations) < self.cap:
            self.violations.append(
                Violation(tag, tuple(int(k) + 1 for k in index), lhs, sense, rhs)
            )


def _domains(instance: Instance, plan: PlanSolution, audit: Audit) -> None:
    for index in np.argwhere(plan.production < 0):
        audit.check("eq46", tuple(index), plan.production[tuple(index)], ">=", 0)
    for index in np.argwhere((plan.running != 0) & (plan.running != 1)):
        audit.check("eq45", tuple(index), plan.running[tuple(index)], "=", 1)
    for index in np.argwhere(plan.inventory < 0):
        audit.check("eq46", tuple(index), plan.inventory[tuple(index)], ">=", 0)
    for index in np.argwhere(plan.backorder < 0):
        audit.check("eq46", tuple(index), plan.backorder[tuple(index)], ">=", 0)


def _inventory(instance: Instance, plan: PlanSolution, audit: Audit) -> None:
    lots = plan.lots
    for a in range(instance.A):
        items = instance.tire_items(a)
        for t in range(instance.T):
            stock = plan.inventory[a, t - 1] if t else instance.initial_inventory[a]
            pending = plan.backorder[a, :, t - 1] if t else instance.initial_backorder[a]
            supply = stock + lots[items, t].sum()
            released = plan.backorder[a, :, t] - pending
            demand = instance.demand[a, :, t]
            index = (a, t)
            audit.check("eq6", index, supply - plan.inventory[a, t] + released.sum(), "=", demand.sum())
            audit.check("eq7", index, supply - plan.inventory[a, t], ">=", 0)
            for c in range(instance.gamma - 1):
                audit.check("eq8", (a, c, t), supply + released[c], ">=", demand[c])
            for c in range(1, instance.gamma):
                audit.check("eq9", (a, c, t), released[c], "<=", demand[c])

            if plan.overstock is not None:
                excess = plan.inventory[a, t] - instance.inventory_max[a, t]
                audit.check("os", index, plan.overstock[a, t], ">=", excess)
                audit.check("os", index, plan.overstock[a, t], ">=", 0)
            if plan.understock is not None:
                deficit = instance.inventory_min[a, t] - plan.inventory[a, t]
                audit.check("us", index, plan.understock[a, t], ">=", deficit)
                audit.check("us", index, plan.understock[a, t], ">=", 0)


def _presses(instance: Instance, plan: PlanSolution, audit: Audit) -> None:
    X, Y = plan.production, plan.running
    M = instance.big_m()
    rates = np.broadcast_to(instance.rate[:, None, :], X.shape)

    for index in np.argwhere(X > M * Y + TOLERANCE):
        audit.check("eq10", tuple(index), X[tuple(index)] - M * Y[tuple(index)], "<=", 0)
    for index in np.argwhere(X < Y):
        audit.check("eq11", tuple(index), X[tuple(index)] - Y[tuple(index)], ">=", 0)
    for index in np.argwhere(X != rates * Y):
        audit.check("eq14", tuple(index), X[tuple(index)], "=", rates[tuple(index)] * Y[tuple(index)])

    per_press = Y.sum(axis=0)
    for p, t in np.argwhere(per_press > 1):
        audit.check("eq12", (p, t), per_press[p, t], "<=", 1)
    for a in range(instance.A):
        used = Y[instance.tire_items(a)].sum(axis=(0, 1))
        for t in np.flatnonzero(used > instance.molds[a]):
            audit.check("eq13", (a, t), used[t], "<=", instance.molds[a])

    eligible = instance.item_eligibility()
    for i, p, t in np.argwhere(X > 0):
        if instance.maintenance[p, t] == 0:
            audit.check("eq42", (i, p, t), X[i, p, t], "<=", 0)
        if eligible[i, p] == 0:
            audit.check("eq44", (instance.item_tire[i], i, p, t), X[i, p, t], "<=", 0)
    for i, p, t in np.argwhere(instance.enforced == 1):
        audit.check("eq41", (i, p, t), Y[i, p, t], ">=", 1)


def _flexibility(
    instance: Instance, plan: PlanSolution, marks: Indicators, audit: Audit
) -> None:
    flexibility = instance.flexibility
    ppm = instance.calendar.periods_per_macro
    setups = marks.setups.sum(axis=(0, 1))
    for t in range(instance.T):
        audit.check("eq18", (t,), setups[t], "<=", flexibility.setups_per_period)
    active = marks.active.sum(axis=0)
    for t in range(instance.T):
        audit.check("eq26", (t,), active[t], "<=", flexibility.simultaneous_items)
    for h in range(instance.H):
        periods = slice(h * ppm, (h + 1) * ppm)
        audit.check("eq19", (h,), setups[periods].sum(), "<=", flexibility.setups_per_macro)
        audit.check(
            "eq28", (h,), marks.endings[:, periods].sum(), "<=", flexibility.endings_per_macro
        )

    if flexibility.min_molds > 0:
        molds = plan.molds
        for i in flexibility.spec_items:
            for t in np.flatnonzero(marks.active[i] > 0):
                audit.check("eq43", (i, t), molds[i, t], ">=", flexibility.min_molds)


def _min_run(instance: Instance, plan: PlanSolution, marks: Indicators, audit: Audit) -> None:
    timeline = Timeline(instance)
    starts = marks.history_starts
    for t in range(1, instance.T + 1):
        if timeline.day_off(t) == 1:
            continue
        window = [timeline.position(o) for o in timeline.run_window(t) if timeline.known(o)]
        if not window:
            continue
        started = starts[..., window].sum(axis=2)
        for i, p in np.argwhere(started > plan.running[..., t - 1]):
            audit.check("eq40", (i, p, t - 1), plan.running[i, p, t - 1], ">=", started[i, p])


def _upstream(instance: Instance, plan: PlanSolution, marks: Indicators, audit: Audit) -> None:
    ppm = instance.calendar.periods_per_macro
    lots = plan.lots
    mass = (lots * instance.unit_weight[:, None]).sum(axis=0)
    for t in range(instance.T):
        audit.check("eq22", (t,), mass[t], "<=", instance.weight_target[t] + instance.tol_up_period[t])
        audit.check("eq23", (t,), mass[t], ">=", instance.weight_target[t] - instance.tol_low_period[t])
    for h in range(instance.H):
        periods = slice(h * ppm, (h + 1) * ppm)
        target = instance.weight_target[periods].sum()
        audit.check("eq20", (h,), mass[periods].sum(), "<=", target + instance.tol_up_macro[h])
        audit.check("eq21", (h,), mass[periods].sum(), ">=", target - instance.tol_low_macro[h])

    for w in range(instance.W):
        items = instance.workshop_items(w)
        load = (lots[items] * instance.unit_time[items, None]).sum(axis=0)
        for h in range(instance.H):
            used = load[h * ppm : (h + 1) * ppm].sum()
            audit.check("eq29", (w, h), used, "<=", instance.workshop_cap[w])

    for i, d, t in np.argwhere(marks.drums > 2):
        audit.check("eq35", (i, d, t), marks.drums[i, d, t], "<=", 2)
    per_drum = marks.drums.sum(axis=0)
    for d in range(instance.N_d):
        for t in range(instance.T):
            audit.check("eq30", (d, t), per_drum[d, t], "<=", instance.drum_count[d])


def audit(instance: Instance, plan: PlanSolution, cap: int = DEFAULT_VIOLATION_CAP) -> Audit:
    plan.check_dimensions(instance)
    result = Audit(cap)
    marks = derive(instance, plan)
    _domains(instance, plan, result)
    _inventory(instance, plan, result)
    _presses(instance, plan, result)
    _flexibility(instance, plan, marks, result)
    _min_run(instance, plan, marks, result)
    _upstream(instance, plan, marks, result)
    return result


def check_feasibility(
    instance: Instance, plan: PlanSolution, cap: int = DEFAULT_VIOLATION_CAP
) -> list[Violation]:
    return audit(instance, plan, cap).violations


def violations_frame(violations: list[Violation]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "tag": violation.tag,
                "index": ",".join(str(k) for k in violation.index),
                "lhs": violation.lhs,
                "sense": violation.sense,
                "rhs": violation.rhs,
            }
            for violation in violations
        ],
        columns=["tag", "index", "lhs", "sense", "rhs"],
    )


def write_violations(violations: list[Violation], path: str) -> None:
    violations_frame(violations).to_csv(path, index=False)
