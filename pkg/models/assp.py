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

"""Assignment of lot-sizing quantities onto presses, and the inventory
re-balancing run when the assignment cannot place them exactly."""

from dataclasses import dataclass

import numpy as np

from config import ObjectiveWeights
from instance import Instance, ensure_valid
from milp import EQ, LinExpr, MilpModel, ModelBuilder, RawSolution, key
from util import DimensionError

from . import names
from .families import BuildOptions, PressLayout, add_press_families, press_production
from .integrated import decode_inventory, decode_press_arrays
from .inventory import add_inventory_block
from .weights import compute_normalizers


@dataclass(frozen=True)
class AsspResult:
    status: str
    deviation: float | None = None
    production: np.ndarray | None = None
    running: np.ndarray | None = None
    time: float = 0.0
    diagnostics: str = ""

    @property
    def has_plan(self) -> bool:
        return self.production is not None


def build_assp(
    instance: Instance, lssp_plan, options: BuildOptions = BuildOptions()
) -> MilpModel:
    """lssp_plan is a lot-sizing plan or its quantities per item and period."""
    ensure_valid(instance)
    lots = np.asarray(getattr(lssp_plan, "lots", lssp_plan))
    if lots.shape != (instance.N, instance.T):
        raise DimensionError(f"lot quantities have shape {lots.shape}")
    builder = ModelBuilder(f"assp-{instance.name}")
    layout = PressLayout(instance, options)
    add_press_families(builder, layout)

    for i in range(instance.N):
        for t in range(1, instance.T + 1):
            excess = builder.continuous(names.excess(i, t))
            shortfall = builder.continuous(names.shortfall(i, t))
            builder.minimize(excess, 1.0)
            builder.minimize(shortfall, 1.0)
            expr = press_production(layout, i, t).add(excess).add(shortfall, -1.0)
            builder.add_row("eq71", key(i + 1, t), expr, EQ, float(lots[i, t - 1]))
    return builder.build()


def decode_assignment(instance: Instance, model: MilpModel, raw: RawSolution) -> AsspResult:
    if not raw.has_values:
        return AsspResult(raw.status, time=raw.time, diagnostics=raw.diagnostics)
    production, running = decode_press_arrays(instance, model, raw)
    return AsspResult(
        raw.status, float(raw.objective), production, running, raw.time, raw.diagnostics
    )


def accept(
    result: AsspResult,
    threshold: float = 0.0,
    relative_tolerance: float = 0.0,
    lot_total: float = 0.0,
) -> bool:
    """Whether an assignment places the lot sizes closely enough."""
    if not result.has_plan or result.deviation is None:
        return False
    return result.deviation <= threshold + relative_tolerance * lot_total + 1e-6


def build_rebalance(
    instance: Instance, production: np.ndarray, weights: ObjectiveWeights
) -> MilpModel:
    """Inventory, backorders and stock deviations for a fixed press plan."""
    lots = np.asarray(production).sum(axis=1)
    builder = ModelBuilder(f"rebalance-{instance.name}")

    def fixed(a: int, t: int) -> LinExpr:
        return LinExpr().add_constant(float(lots[instance.tire_items(a), t - 1].sum()))

    add_inventory_block(builder, instance, fixed, weights, compute_normalizers(instance))
    return builder.build()


def decode_rebalance(instance: Instance, model: MilpModel, raw: RawSolution):
    return decode_inventory(instance, model, raw)
