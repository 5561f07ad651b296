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

"""The integrated lot-sizing and press scheduling model."""

import numpy as np

from config import INTEGRALITY_TOLERANCE, ObjectiveWeights
from evaluator.plan import PlanSolution
from instance import Instance, ensure_valid
from milp import LinExpr, MilpModel, ModelBuilder, RawSolution
from util import DecodeError

from . import names
from .families import BuildOptions, PressLayout, add_press_families, press_production
from .inventory import INTEGRATED_TAGS, add_inventory_block
from .weights import compute_normalizers


def build_integrated(
    instance: Instance,
    weights: ObjectiveWeights,
    options: BuildOptions = BuildOptions(),
) -> MilpModel:
    ensure_valid(instance)
    builder = ModelBuilder(f"integrated-{instance.name}")
    layout = PressLayout(instance, options)
    add_press_families(builder, layout)

    def production(a: int, t: int) -> LinExpr:
        expr = LinExpr()
        for i in instance.tire_items(a):
            for id, coef in press_production(layout, i, t).coefs.items():
                expr.add(id, coef)
        return expr

    add_inventory_block(
        builder, instance, production, weights, compute_normalizers(instance), INTEGRATED_TAGS
    )
    return builder.build()


def _value(raw: RawSolution, model: MilpModel, id: str, integral: bool) -> float:
    if not model.has(id):
        return 0.0
    value = raw.values[id]
    if integral:
        nearest = round(value)
        if abs(value - nearest) > INTEGRALITY_TOLERANCE:
            raise DecodeError(f"{id} = {value} is not integral")
        return float(nearest)
    return value


def decode_press_arrays(
    instance: Instance, model: MilpModel, raw: RawSolution
) -> tuple[np.ndarray, np.ndarray]:
    """Production and running indicators per item, press and period."""
    if not raw.has_values:
        raise DecodeError(f"cannot decode a {raw.status} solution of {model.name}")
    shape = (instance.N, instance.P, instance.T)
    production = np.zeros(shape, dtype=np.int64)
    running = np.zeros(shape, dtype=np.int64)
    for i in range(instance.N):
        for p in range(instance.P):
            for t in range(1, instance.T + 1):
                production[i, p, t - 1] = _value(raw, model, names.production(i, p, t), True)
                running[i, p, t - 1] = _value(raw, model, names.running(i, p, t), True)
    return production, running


def decode_inventory(
    instance: Instance, model: MilpModel, raw: RawSolution
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    if not raw.has_values:
        raise DecodeError(f"cannot decode a {raw.status} solution of {model.name}")
    A, gamma, T = instance.A, instance.gamma, instance.T
    inventory = np.zeros((A, T), dtype=np.int64)
    backorder = np.zeros((A, gamma, T), dtype=np.int64)
    overstock = np.zeros((A, T))
    understock = np.zeros((A, T))
    for a in range(A):
        for t in range(1, T + 1):
            # inventory is continuous in the model but integral at any vertex
            inventory[a, t - 1] = _value(raw, model, names.inventory(a, t), True)
            for c in range(gamma):
                backorder[a, c, t - 1] = _value(raw, model, names.backorder(a, c, t), True)
            overstock[a, t - 1] = _value(raw, model, names.overstock(a, t), False)
            understock[a, t - 1] = _value(raw, model, names.understock(a, t), False)
    return inventory, backorder, overstock, understock


def decode_plan(instance: Instance, model: MilpModel, raw: RawSolution) -> PlanSolution:
    production, running = decode_press_arrays(instance, model, raw)
    return PlanSolution(production, running, *decode_inventory(instance, model, raw))
