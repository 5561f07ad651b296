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

"""Press-free lot-sizing model.

Quantities are decided per item as a number of running molds; which press
carries each mold is left to the assignment model.
"""

from dataclasses import dataclass, field

import numpy as np

from config import INTEGRALITY_TOLERANCE, ObjectiveWeights
from instance import Instance, Timeline, ensure_valid
from milp import EQ, GE, LE, LinExpr, MilpModel, ModelBuilder, RawPool, RawSolution, key
from milp import INFEASIBLE
from util import DecodeError, SolverAdapterError

from . import names
from .families import add_drum_rows, add_ending_caps
from .integrated import decode_inventory
from .inventory import LOT_SIZING_TAGS, add_inventory_block
from .weights import compute_normalizers, objective_coefficients


@dataclass(frozen=True)
class LsspPlan:
    lots: np.ndarray
    molds: np.ndarray
    running: np.ndarray
    setups: np.ndarray
    endings: np.ndarray
    inventory: np.ndarray
    backorder: np.ndarray
    overstock: np.ndarray
    understock: np.ndarray
    objective: float
    terms: dict = field(default_factory=dict)
    rank: int = 0

    @property
    def total(self) -> int:
        return int(self.lots.sum())


class _MoldHistory:
    """Mold counts per item and period, warm periods read as constants."""

    def __init__(self, instance: Instance) -> None:
        self.timeline = Timeline(instance)
        self.warm = instance.warm_state.molds.astype(np.int64)

    def add(self, expr: LinExpr, i: int, o: int, coef: float = 1.0) -> LinExpr:
        if o >= 1:
            expr.add(names.molds(i, o), coef)
        elif self.timeline.known(o):
            expr.add_constant(coef * self.warm[i, self.timeline.position(o)])
        return expr


def _declare(builder: ModelBuilder, instance: Instance) -> None:
    for i in range(instance.N):
        cap = float(instance.molds[instance.item_tire[i]])
        for t in range(1, instance.T + 1):
            builder.continuous(names.lot(i, t))
            builder.integer(names.molds(i, t), 0.0, cap)
            builder.binary(names.lot_running(i, t))
            builder.binary(names.lot_setup(i, t))
            builder.binary(names.ending(i, t))
    for i, d in zip(*np.nonzero(instance.drum_yield > 0)):
        for t in range(1, instance.T + 1):
            builder.binary(names.drum_flag(i, d, t))
            builder.integer(names.drums(i, d, t))


def _mold_links(builder: ModelBuilder, instance: Instance, big_m: float) -> None:
    for t in range(1, instance.T + 1):
        for i in range(instance.N):
            suffix = key(i + 1, t)
            nu, y = names.molds(i, t), names.lot_running(i, t)
            builder.add_row("eq51", suffix, LinExpr().add(nu).add(y, -big_m), LE, 0.0)
            builder.add_row("eq52", suffix, LinExpr().add(nu).add(y, -1.0), GE, 0.0)
            rate = float(instance.rate[i, t - 1])
            expr = LinExpr().add(names.lot(i, t)).add(nu, -rate)
            builder.add_row("eq54", suffix, expr, EQ, 0.0)
        for a in range(instance.A):
            expr = LinExpr()
            for i in instance.tire_items(a):
                expr.add(names.molds(i, t))
            builder.add_row("eq53", key(a + 1, t), expr, LE, float(instance.molds[a]))


def _setups(builder: ModelBuilder, instance: Instance, history: _MoldHistory) -> None:
    timeline = history.timeline
    for i in range(instance.N):
        for t in range(1, instance.T + 1):
            day_off = timeline.day_off(t - 1)
            previous = timeline.previous(t) if day_off else t - 1
            expr = LinExpr().add(names.lot_setup(i, t)).add(names.molds(i, t), -1.0)
            history.add(expr, i, previous)
            builder.add_row("eq56" if day_off else "eq55", key(i + 1, t), expr, GE, 0.0)

    flexibility = instance.flexibility
    ppm = instance.calendar.periods_per_macro
    for t in range(1, instance.T + 1):
        expr = LinExpr()
        for i in range(instance.N):
            expr.add(names.lot_setup(i, t))
        builder.add_row("eq57", key(t), expr, LE, float(flexibility.setups_per_period))
    for h in range(instance.H):
        expr = LinExpr()
        for t in range(h * ppm + 1, (h + 1) * ppm + 1):
            for i in range(instance.N):
                expr.add(names.lot_setup(i, t))
        builder.add_row("eq58", key(h + 1), expr, LE, float(flexibility.setups_per_macro))


def _tonnage(builder: ModelBuilder, instance: Instance) -> None:
    ppm = instance.calendar.periods_per_macro

    def weight(t: int, expr: LinExpr) -> LinExpr:
        for i in range(instance.N):
            expr.add(names.lot(i, t), float(instance.unit_weight[i]))
        return expr

    for h in range(instance.H):
        periods = range(h * ppm + 1, (h + 1) * ppm + 1)
        target = float(instance.weight_target[h * ppm : (h + 1) * ppm].sum())
        for tag, sense, rhs in (
            ("eq59", LE, target + float(instance.tol_up_macro[h])),
            ("eq60", GE, target - float(instance.tol_low_macro[h])),
        ):
            expr = LinExpr()
            for t in periods:
                weight(t, expr)
            builder.add_row(tag, key(h + 1), expr, sense, rhs)

    for t in range(1, instance.T + 1):
        target = float(instance.weight_target[t - 1])
        builder.add_row(
            "eq61", key(t), weight(t, LinExpr()), LE, target + float(instance.tol_up_period[t - 1])
        )
        builder.add_row(
            "eq62", key(t), weight(t, LinExpr()), GE, target - float(instance.tol_low_period[t - 1])
        )


def _simultaneity(builder: ModelBuilder, instance: Instance) -> None:
    for t in range(1, instance.T + 1):
        expr = LinExpr()
        for i in range(instance.N):
            expr.add(names.lot_running(i, t))
        builder.add_row(
            "eq63", key(t), expr, LE, float(instance.flexibility.simultaneous_items)
        )


def _endings(builder: ModelBuilder, instance: Instance, history: _MoldHistory) -> None:
    P = instance.P
    window = instance.flexibility.ending_window
    scale = float(max(P, int(instance.molds.max(initial=0))))
    for i in range(instance.N):
        for t in range(1, instance.T + 1):
            expr = LinExpr().add(names.ending(i, t))
            history.add(expr, i, t - window, -1.0 / scale)
            for o in range(t - window + 1, t + 1):
                history.add(expr, i, o, float(P))
            builder.add_row("eq27", key(i + 1, t), expr, GE, 0.0)
    add_ending_caps(builder, instance)


def _workshops(builder: ModelBuilder, instance: Instance) -> None:
    ppm = instance.calendar.periods_per_macro
    for w in range(instance.W):
        for h in range(instance.H):
            expr = LinExpr()
            for i in instance.workshop_items(w):
                for t in range(h * ppm + 1, (h + 1) * ppm + 1):
                    expr.add(names.lot(i, t), float(instance.unit_time[i]))
            builder.add_row("eq64", key(w + 1, h + 1), expr, LE, float(instance.workshop_cap[w]))


def _rules(builder: ModelBuilder, instance: Instance) -> None:
    for i, t in np.argwhere(instance.enforced_molds > 0):
        expr = LinExpr().add(names.molds(i, t + 1))
        builder.add_row("eq68", key(i + 1, t + 1), expr, GE, float(instance.enforced_molds[i, t]))

    flexibility = instance.flexibility
    if flexibility.min_molds > 0:
        for i in flexibility.spec_items:
            for t in range(1, instance.T + 1):
                expr = LinExpr().add(names.molds(i, t)).add(
                    names.lot_running(i, t), -float(flexibility.min_molds)
                )
                builder.add_row("molds", key(i + 1, t), expr, GE, 0.0)


def build_lssp(instance: Instance, weights: ObjectiveWeights) -> MilpModel:
    ensure_valid(instance)
    builder = ModelBuilder(f"lssp-{instance.name}")
    history = _MoldHistory(instance)
    big_m = instance.big_m()

    _declare(builder, instance)

    def production(a: int, t: int) -> LinExpr:
        expr = LinExpr()
        for i in instance.tire_items(a):
            expr.add(names.lot(i, t))
        return expr

    add_inventory_block(
        builder, instance, production, weights, compute_normalizers(instance), LOT_SIZING_TAGS
    )
    _mold_links(builder, instance, big_m)
    _setups(builder, instance, history)
    _tonnage(builder, instance)
    _simultaneity(builder, instance)
    _endings(builder, instance, history)
    _workshops(builder, instance)
    add_drum_rows(
        builder,
        instance,
        big_m,
        lambda i, t, coef: LinExpr().add(names.molds(i, t), coef),
        ("eq65", "eq66", "eq67"),
    )
    _rules(builder, instance)
    return builder.build()


def pattern_ids(instance: Instance) -> list[str]:
    """Binaries whose values tell pool entries apart."""
    return [
        names.lot_running(i, t) for i in range(instance.N) for t in range(1, instance.T + 1)
    ]


def _integral(raw: RawSolution, id: str) -> int:
    value = raw.values[id]
    nearest = round(value)
    if abs(value - nearest) > INTEGRALITY_TOLERANCE:
        raise DecodeError(f"{id} = {value} is not integral")
    return int(nearest)


def objective_terms(
    instance: Instance,
    weights: ObjectiveWeights,
    backorder: np.ndarray,
    overstock: np.ndarray,
    understock: np.ndarray,
) -> dict[str, float]:
    class_coef, over_coef, under_coef = objective_coefficients(
        weights, compute_normalizers(instance)
    )
    terms = {
        f"BC{c + 1}": class_coef[c] * float(backorder[:, c, :].sum())
        for c in range(instance.gamma)
    }
    terms["OS"] = over_coef * float(overstock.sum())
    terms["US"] = under_coef * float(understock.sum())
    return terms


def decode_lssp(
    instance: Instance,
    model: MilpModel,
    raw: RawSolution,
    weights: ObjectiveWeights,
    rank: int = 0,
) -> LsspPlan:
    if not raw.has_values:
        raise DecodeError(f"cannot decode a {raw.status} solution of {model.name}")
    N, T = instance.N, instance.T
    arrays = {name: np.zeros((N, T), dtype=np.int64) for name in ("lots", "molds", "running", "setups", "endings")}
    for i in range(N):
        for t in range(1, T + 1):
            arrays["molds"][i, t - 1] = _integral(raw, names.molds(i, t))
            arrays["running"][i, t - 1] = _integral(raw, names.lot_running(i, t))
            arrays["setups"][i, t - 1] = _integral(raw, names.lot_setup(i, t))
            arrays["endings"][i, t - 1] = _integral(raw, names.ending(i, t))
            lot = raw.values[names.lot(i, t)]
            expected = int(instance.rate[i, t - 1]) * arrays["molds"][i, t - 1]
            if abs(lot - expected) > INTEGRALITY_TOLERANCE * max(1.0, expected):
                raise DecodeError(
                    f"{names.lot(i, t)} = {lot} is not {expected} = rate x molds"
                )
            arrays["lots"][i, t - 1] = expected

    inventory, backorder, overstock, understock = decode_inventory(instance, model, raw)
    return LsspPlan(
        **arrays,
        inventory=inventory,
        backorder=backorder,
        overstock=overstock,
        understock=understock,
        objective=float(raw.objective),
        terms=objective_terms(instance, weights, backorder, overstock, understock),
        rank=rank,
    )


def extract_pool(
    instance: Instance, model: MilpModel, pool: RawPool, weights: ObjectiveWeights
) -> list[LsspPlan]:
    """Decoded pool entries by ascending objective; stable on ties."""
    if pool.status == INFEASIBLE:
        return []
    solutions = [raw for raw in pool.solutions if raw.has_values]
    if not solutions:
        raise SolverAdapterError(f"{model.name}: solver returned no solution ({pool.status})")
    ordered = sorted(solutions, key=lambda raw: raw.objective)
    return [
        decode_lssp(instance, model, raw, weights, rank) for rank, raw in enumerate(ordered)
    ]
