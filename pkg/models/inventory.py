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

"""Inventory balance, class prioritisation and stock-band deviations.

Shared by the integrated model, the lot-sizing model and the re-balancing
model; only the production expression of a tire and period differs.
"""

from typing import Callable

from config import ObjectiveWeights
from instance import Instance
from milp import EQ, GE, LE, LinExpr, ModelBuilder, key

from . import names
from .weights import Normalizers, objective_coefficients

INTEGRATED_TAGS = ("eq6", "eq7", "eq8", "eq9")
LOT_SIZING_TAGS = ("eq47", "eq48", "eq49", "eq50")

Production = Callable[[int, int], LinExpr]


def add_inventory_block(
    builder: ModelBuilder,
    instance: Instance,
    production: Production,
    weights: ObjectiveWeights,
    normalizers: Normalizers,
    tags: tuple[str, str, str, str] = INTEGRATED_TAGS,
) -> None:
    """production(a, t) returns a fresh expression of what tire a gets in period t."""
    balance, no_ghost_stock, priority, no_ghost_backorder = tags
    class_coef, over_coef, under_coef = objective_coefficients(weights, normalizers)
    A, gamma, T = instance.A, instance.gamma, instance.T

    for a in range(A):
        for t in range(1, T + 1):
            builder.continuous(names.inventory(a, t))
            for c in range(gamma):
                builder.minimize(builder.integer(names.backorder(a, c, t)), class_coef[c])
            builder.minimize(builder.continuous(names.overstock(a, t)), over_coef)
            builder.minimize(builder.continuous(names.understock(a, t)), under_coef)

    for a in range(A):
        for t in range(1, T + 1):

            def supply() -> LinExpr:
                expr = production(a, t)
                if t == 1:
                    return expr.add_constant(float(instance.initial_inventory[a]))
                return expr.add(names.inventory(a, t - 1))

            def released(expr: LinExpr, c: int) -> LinExpr:
                # B_ct - B_c,t-1
                expr.add(names.backorder(a, c, t))
                if t == 1:
                    return expr.add_constant(-float(instance.initial_backorder[a, c]))
                return expr.add(names.backorder(a, c, t - 1), -1.0)

            demand = instance.demand[a, :, t - 1]

            expr = supply().add(names.inventory(a, t), -1.0)
            for c in range(gamma):
                released(expr, c)
            builder.add_row(balance, key(a + 1, t), expr, EQ, float(demand.sum()))

            expr = supply().add(names.inventory(a, t), -1.0)
            builder.add_row(no_ghost_stock, key(a + 1, t), expr, GE, 0.0)

            for c in range(gamma - 1):
                expr = released(supply(), c)
                builder.add_row(priority, key(a + 1, c + 1, t), expr, GE, float(demand[c]))

            for c in range(1, gamma):
                expr = released(LinExpr(), c)
                builder.add_row(no_ghost_backorder, key(a + 1, c + 1, t), expr, LE, float(demand[c]))

            expr = LinExpr().add(names.overstock(a, t)).add(names.inventory(a, t), -1.0)
            builder.add_row("os", key(a + 1, t), expr, GE, -float(instance.inventory_max[a, t - 1]))
            expr = LinExpr().add(names.understock(a, t)).add(names.inventory(a, t))
            builder.add_row("us", key(a + 1, t), expr, GE, float(instance.inventory_min[a, t - 1]))
