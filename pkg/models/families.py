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

"""Press-level constraint families of the integrated and assignment models.

Rows carry the equation number of the formulation as their tag. Look-backs
before period 1 read the warm state as constants.
"""

from dataclasses import dataclass

import numpy as np

from instance import Instance, Timeline, extend, start_flags
from milp import EQ, GE, LE, LinExpr, ModelBuilder, key

from . import names


@dataclass(frozen=True)
class BuildOptions:
    compact: bool = False


class PressLayout:
    """Which (item, press) pairs carry variables, plus the warm history."""

    def __init__(self, instance: Instance, options: BuildOptions) -> None:
        self.instance = instance
        self.options = options
        self.timeline = Timeline(instance)
        self.big_m = instance.big_m()

        warm = instance.warm_state
        self.eligible = instance.item_eligibility() == 1
        self.warm_running = warm.running.astype(np.int64)
        if options.compact:
            available = instance.maintenance.any(axis=1)
            self.pairs = (self.eligible & available[None, :]) | self.warm_running.any(axis=2)
        else:
            self.pairs = np.ones((instance.N, instance.P), dtype=bool)

        horizon = np.zeros((instance.N, instance.P, instance.T), dtype=np.int64)
        self.warm_starts = start_flags(
            self.timeline, extend(self.warm_running, horizon)
        )[..., : warm.depth].astype(np.int64)
        self.warm_load = self.warm_running.sum(axis=0)

    def exists(self, i: int, p: int) -> bool:
        return bool(self.pairs[i, p])

    def presses_of(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.pairs[i])

    def items_on(self, p: int) -> np.ndarray:
        return np.flatnonzero(self.pairs[:, p])

    def add_running(self, expr: LinExpr, i: int, p: int, o: int, coef: float = 1.0) -> LinExpr:
        if o >= 1:
            if self.exists(i, p):
                expr.add(names.running(i, p, o), coef)
        elif self.timeline.known(o):
            expr.add_constant(coef * self.warm_running[i, p, self.timeline.position(o)])
        return expr

    def add_start(self, expr: LinExpr, i: int, p: int, o: int, coef: float = 1.0) -> LinExpr:
        if o >= 1:
            if self.exists(i, p):
                expr.add(names.start(i, p, o), coef)
        elif self.timeline.known(o):
            expr.add_constant(coef * self.warm_starts[i, p, self.timeline.position(o)])
        return expr

    def add_others(self, expr: LinExpr, i: int, p: int, o: int, coef: float) -> LinExpr:
        """coef times the running indicators of every other item on press p."""
        if o >= 1:
            if self.options.compact:
                expr.add(names.load(p, o), coef)
                self.add_running(expr, i, p, o, -coef)
            else:
                for j in self.items_on(p):
                    if j != i:
                        expr.add(names.running(j, p, o), coef)
        elif self.timeline.known(o):
            position = self.timeline.position(o)
            others = self.warm_load[p, position] - self.warm_running[i, p, position]
            expr.add_constant(coef * others)
        return expr

    def uses_load(self) -> bool:
        return self.options.compact and self.instance.flexibility.setup_window > 0


def declare_press_variables(builder: ModelBuilder, layout: PressLayout) -> None:
    instance = layout.instance
    N, P, T = instance.N, instance.P, instance.T
    for i in range(N):
        for p in layout.presses_of(i):
            for t in range(1, T + 1):
                upper = np.inf
                if layout.options.compact and (
                    not layout.eligible[i, p] or instance.maintenance[p, t - 1] == 0
                ):
                    upper = 0.0
                builder.integer(names.production(i, p, t), 0.0, upper)
                builder.binary(names.running(i, p, t))
                builder.binary(names.setup(i, p, t))
                builder.binary(names.start(i, p, t))
    for i in range(N):
        for t in range(1, T + 1):
            builder.binary(names.active(i, t))
            builder.binary(names.ending(i, t))
    for i, d in zip(*np.nonzero(instance.drum_yield > 0)):
        for t in range(1, T + 1):
            builder.binary(names.drum_flag(i, d, t))
            builder.integer(names.drums(i, d, t))
    if layout.uses_load():
        for p in range(P):
            for t in range(1, T + 1):
                builder.continuous(names.load(p, t))
                expr = LinExpr().add(names.load(p, t))
                for i in layout.items_on(p):
                    expr.add(names.running(i, p, t), -1.0)
                builder.add_row("load", key(p + 1, t), expr, EQ, 0.0)


def press_production(layout: PressLayout, i: int, t: int, coef: float = 1.0) -> LinExpr:
    expr = LinExpr()
    for p in layout.presses_of(i):
        expr.add(names.production(i, p, t), coef)
    return expr


def _press_running(layout: PressLayout, i: int, o: int, coef: float = 1.0, expr=None) -> LinExpr:
    expr = expr if expr is not None else LinExpr()
    for p in range(layout.instance.P):
        layout.add_running(expr, i, p, o, coef)
    return expr


def add_linking(builder: ModelBuilder, layout: PressLayout) -> None:
    instance = layout.instance
    M = layout.big_m
    for t in range(1, instance.T + 1):
        for i in range(instance.N):
            for p in layout.presses_of(i):
                suffix = key(i + 1, p + 1, t)
                x, y = names.production(i, p, t), names.running(i, p, t)
                if not layout.options.compact:
                    builder.add_row("eq10", suffix, LinExpr().add(x).add(y, -M), LE, 0.0)
                    builder.add_row("eq11", suffix, LinExpr().add(x).add(y, -1.0), GE, 0.0)
                rate = float(instance.rate[i, t - 1])
                builder.add_row("eq14", suffix, LinExpr().add(x).add(y, -rate), EQ, 0.0)

        for p in range(instance.P):
            expr = LinExpr()
            for i in layout.items_on(p):
                expr.add(names.running(i, p, t))
            builder.add_row("eq12", key(p + 1, t), expr, LE, 1.0)

        for a in range(instance.A):
            expr = LinExpr()
            for i in instance.tire_items(a):
                for p in layout.presses_of(i):
                    expr.add(names.running(i, p, t))
            builder.add_row("eq13", key(a + 1, t), expr, LE, float(instance.molds[a]))


def add_setups(builder: ModelBuilder, layout: PressLayout) -> None:
    instance = layout.instance
    timeline = layout.timeline
    flexibility = instance.flexibility
    window = flexibility.setup_window
    share = 1.0 / (window * instance.N) if window > 0 else 0.0

    for i in range(instance.N):
        for p in layout.presses_of(i):
            for t in range(1, instance.T + 1):
                suffix = key(i + 1, p + 1, t)
                s, y = names.setup(i, p, t), names.running(i, p, t)

                expr = LinExpr().add(s).add(y, -1.0)
                for o in range(t - window, t):
                    layout.add_running(expr, i, p, o)
                builder.add_row("eq15", suffix, expr, GE, 0.0)

                day_off = timeline.day_off(t - 1)
                previous = timeline.previous(t) if day_off else t - 1
                expr = LinExpr().add(s).add(y, -1.0)
                layout.add_running(expr, i, p, previous)
                for o in range(t - window, t):
                    layout.add_others(expr, i, p, o, -share)
                builder.add_row("eq16" if day_off else "eq17", suffix, expr, GE, -1.0)

    ppm = instance.calendar.periods_per_macro
    for t in range(1, instance.T + 1):
        expr = LinExpr()
        for i in range(instance.N):
            for p in layout.presses_of(i):
                expr.add(names.setup(i, p, t))
        builder.add_row("eq18", key(t), expr, LE, float(flexibility.setups_per_period))
    for h in range(instance.H):
        expr = LinExpr()
        for t in range(h * ppm + 1, (h + 1) * ppm + 1):
            for i in range(instance.N):
                for p in layout.presses_of(i):
                    expr.add(names.setup(i, p, t))
        builder.add_row("eq19", key(h + 1), expr, LE, float(flexibility.setups_per_macro))


def add_tonnage(builder: ModelBuilder, layout: PressLayout) -> None:
    instance = layout.instance
    ppm = instance.calendar.periods_per_macro

    def weight(t: int, expr: LinExpr) -> LinExpr:
        for i in range(instance.N):
            for p in layout.presses_of(i):
                expr.add(names.production(i, p, t), float(instance.unit_weight[i]))
        return expr

    for h in range(instance.H):
        periods = range(h * ppm + 1, (h + 1) * ppm + 1)
        target = float(instance.weight_target[h * ppm : (h + 1) * ppm].sum())
        expr = LinExpr()
        for t in periods:
            weight(t, expr)
        builder.add_row("eq20", key(h + 1), expr, LE, target + float(instance.tol_up_macro[h]))
        expr = LinExpr()
        for t in periods:
            weight(t, expr)
        builder.add_row("eq21", key(h + 1), expr, GE, target - float(instance.tol_low_macro[h]))

    for t in range(1, instance.T + 1):
        target = float(instance.weight_target[t - 1])
        builder.add_row(
            "eq22", key(t), weight(t, LinExpr()), LE, target + float(instance.tol_up_period[t - 1])
        )
        builder.add_row(
            "eq23", key(t), weight(t, LinExpr()), GE, target - float(instance.tol_low_period[t - 1])
        )


def add_simultaneity(builder: ModelBuilder, layout: PressLayout) -> None:
    instance = layout.instance
    P = instance.P
    for t in range(1, instance.T + 1):
        total = LinExpr()
        for i in range(instance.N):
            sigma = names.active(i, t)
            expr = _press_running(layout, i, t, -1.0 / P).add(sigma)
            builder.add_row("eq24", key(i + 1, t), expr, GE, 0.0)
            expr = _press_running(layout, i, t, -1.0).add(sigma)
            builder.add_row("eq25", key(i + 1, t), expr, LE, 0.0)
            total.add(sigma)
        builder.add_row(
            "eq26", key(t), total, LE, float(instance.flexibility.simultaneous_items)
        )


def add_endings(builder: ModelBuilder, layout: PressLayout) -> None:
    instance = layout.instance
    P = instance.P
    window = instance.flexibility.ending_window
    for i in range(instance.N):
        for t in range(1, instance.T + 1):
            expr = LinExpr().add(names.ending(i, t))
            _press_running(layout, i, t - window, -1.0 / P, expr)
            for o in range(t - window + 1, t + 1):
                _press_running(layout, i, o, float(P), expr)
            builder.add_row("eq27", key(i + 1, t), expr, GE, 0.0)
    add_ending_caps(builder, instance)


def add_ending_caps(builder: ModelBuilder, instance: Instance) -> None:
    ppm = instance.calendar.periods_per_macro
    for h in range(instance.H):
        expr = LinExpr()
        for t in range(h * ppm + 1, (h + 1) * ppm + 1):
            for i in range(instance.N):
                expr.add(names.ending(i, t))
        builder.add_row(
            "eq28", key(h + 1), expr, LE, float(instance.flexibility.endings_per_macro)
        )


def add_workshops(builder: ModelBuilder, layout: PressLayout) -> None:
    instance = layout.instance
    ppm = instance.calendar.periods_per_macro
    for w in range(instance.W):
        for h in range(instance.H):
            expr = LinExpr()
            for i in instance.workshop_items(w):
                for t in range(h * ppm + 1, (h + 1) * ppm + 1):
                    for p in layout.presses_of(i):
                        expr.add(names.production(i, p, t), float(instance.unit_time[i]))
            builder.add_row(
                "eq29", key(w + 1, h + 1), expr, LE, float(instance.workshop_cap[w])
            )


def add_drum_rows(
    builder: ModelBuilder,
    instance: Instance,
    big_m: float,
    usage,
    tags: tuple[str, str, str] = ("eq35", "eq36", "eq37"),
) -> None:
    """Drum availability and the linearisation of the drum count.

    usage(i, t, coef) returns coef times the number of molds of item i
    running in period t.
    """
    lower_tag, on_tag, off_tag = tags
    M = big_m
    for d in range(instance.N_d):
        for t in range(1, instance.T + 1):
            expr = LinExpr()
            for i in instance.drum_items(d):
                expr.add(names.drums(i, d, t))
            builder.add_row("eq30", key(d + 1, t), expr, LE, float(instance.drum_count[d]))

    for i, d in zip(*np.nonzero(instance.drum_yield > 0)):
        ratio = 1.0 / float(instance.drum_yield[i, d])
        for t in range(1, instance.T + 1):
            suffix = key(i + 1, d + 1, t)
            count, flag = names.drums(i, d, t), names.drum_flag(i, d, t)
            builder.add_row("eq31", suffix, LinExpr().add(count).add(flag, -M), GE, 2.0 - M)
            builder.add_row("eq32", suffix, LinExpr().add(count).add(flag, M), LE, 2.0 + M)
            builder.add_row("eq33", suffix, LinExpr().add(count).add(flag, M), GE, 0.0)
            builder.add_row("eq34", suffix, LinExpr().add(count).add(flag, -M), LE, 1.0)
            builder.add_row(lower_tag, suffix, usage(i, t, -ratio).add(count), GE, 0.0)
            builder.add_row(on_tag, suffix, usage(i, t, ratio).add(flag, -M), GE, 1.0 - M)
            builder.add_row(off_tag, suffix, usage(i, t, ratio).add(flag, -M), LE, 1.0)


def add_drums(builder: ModelBuilder, layout: PressLayout) -> None:
    add_drum_rows(
        builder,
        layout.instance,
        layout.big_m,
        lambda i, t, coef: _press_running(layout, i, t, coef),
    )


def add_min_run(builder: ModelBuilder, layout: PressLayout) -> None:
    instance = layout.instance
    timeline = layout.timeline
    for i in range(instance.N):
        for p in layout.presses_of(i):
            for t in range(1, instance.T + 1):
                suffix = key(i + 1, p + 1, t)
                m, y = names.start(i, p, t), names.running(i, p, t)
                day_off = timeline.day_off(t - 1)
                previous = timeline.previous(t) if day_off else t - 1
                expr = LinExpr().add(m).add(y, -1.0)
                layout.add_running(expr, i, p, previous)
                builder.add_row("eq39" if day_off else "eq38", suffix, expr, GE, 0.0)

                if timeline.day_off(t) == 0:
                    expr = LinExpr().add(y)
                    for o in timeline.run_window(t):
                        layout.add_start(expr, i, p, o, -1.0)
                    builder.add_row("eq40", suffix, expr, GE, 0.0)


def add_rules(builder: ModelBuilder, layout: PressLayout) -> None:
    instance = layout.instance
    M = layout.big_m
    compact = layout.options.compact
    for i in range(instance.N):
        for p in layout.presses_of(i):
            eligible = float(layout.eligible[i, p])
            for t in range(1, instance.T + 1):
                suffix = key(i + 1, p + 1, t)
                if instance.enforced[i, p, t - 1] == 1:
                    builder.add_row("eq41", suffix, LinExpr().add(names.running(i, p, t)), GE, 1.0)
                if compact:
                    continue
                x = LinExpr().add(names.production(i, p, t))
                available = float(instance.maintenance[p, t - 1])
                builder.add_row("eq42", suffix, x, LE, available * M)
                x = LinExpr().add(names.production(i, p, t))
                builder.add_row("eq44", suffix, x, LE, eligible * M)

    flexibility = instance.flexibility
    if flexibility.min_molds > 0:
        for i in flexibility.spec_items:
            for t in range(1, instance.T + 1):
                expr = _press_running(layout, i, t).add(
                    names.active(i, t), -float(flexibility.min_molds)
                )
                builder.add_row("eq43", key(i + 1, t), expr, GE, 0.0)


def add_press_families(builder: ModelBuilder, layout: PressLayout) -> None:
    declare_press_variables(builder, layout)
    add_linking(builder, layout)
    add_setups(builder, layout)
    add_tonnage(builder, layout)
    add_simultaneity(builder, layout)
    add_endings(builder, layout)
    add_workshops(builder, layout)
    add_drums(builder, layout)
    add_min_run(builder, layout)
    add_rules(builder, layout)
