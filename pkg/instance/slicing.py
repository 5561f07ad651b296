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

from dataclasses import replace

import numpy as np

from util import DimensionError

from .classes import Calendar, Instance, WarmState

# fields sliced along their last (period) axis
PERIOD_FIELDS = (
    "demand",
    "inventory_min",
    "inventory_max",
    "rate",
    "weight_target",
    "tol_up_period",
    "tol_low_period",
    "maintenance",
    "enforced",
    "enforced_molds",
)
MACRO_FIELDS = ("tol_up_macro", "tol_low_macro")


def slice_periods(instance: Instance, start: int, stop: int) -> Instance:
    """Restrict an instance to whole macro-periods [start, stop) of its horizon.

    Initial stock, backorders and the warm state are left as they are; use
    with_initial_state to carry the state of the preceding periods in.
    """
    ppm = instance.calendar.periods_per_macro
    if not 0 <= start < stop <= instance.T or start % ppm or stop % ppm:
        raise DimensionError(
            f"periods [{start}, {stop}) are not whole macro-periods of {instance.T} periods"
        )
    changes = {name: getattr(instance, name)[..., start:stop] for name in PERIOD_FIELDS}
    changes.update(
        {name: getattr(instance, name)[start // ppm : stop // ppm] for name in MACRO_FIELDS}
    )
    changes["calendar"] = Calendar(ppm, instance.calendar.days_off[start:stop])
    return replace(instance, **changes)


def slice_macro(instance: Instance, h: int) -> Instance:
    ppm = instance.calendar.periods_per_macro
    if not 0 <= h < instance.H:
        raise DimensionError(f"macro-period {h} is outside 0..{instance.H - 1}")
    return slice_periods(instance, h * ppm, (h + 1) * ppm)


def with_initial_state(
    instance: Instance,
    inventory: np.ndarray | None = None,
    backorder: np.ndarray | None = None,
    warm_state: WarmState | None = None,
) -> Instance:
    changes = {}
    if inventory is not None:
        inventory = np.asarray(inventory)
        if inventory.shape != (instance.A,):
            raise DimensionError(f"initial inventory has shape {inventory.shape}")
        changes["initial_inventory"] = np.rint(inventory).astype(np.int64)
    if backorder is not None:
        backorder = np.asarray(backorder)
        if backorder.shape != (instance.A, instance.gamma):
            raise DimensionError(f"initial backorder has shape {backorder.shape}")
        changes["initial_backorder"] = np.rint(backorder).astype(np.int64)
    if warm_state is not None:
        if warm_state.depth != instance.warm_state.depth:
            raise DimensionError(
                f"warm state depth {warm_state.depth} does not match {instance.warm_state.depth}"
            )
        changes["warm_state"] = warm_state
    return replace(instance, **changes)


def roll_warm_state(
    instance: Instance, running: np.ndarray, molds: np.ndarray
) -> WarmState:
    """Warm state for the periods right after the given instance's horizon."""
    if running.shape != (instance.N, instance.P, instance.T):
        raise DimensionError(f"running indicators have shape {running.shape}")
    if molds.shape != (instance.N, instance.T):
        raise DimensionError(f"mold counts have shape {molds.shape}")
    return instance.warm_state.rolled(
        np.asarray(running, dtype=np.int8),
        np.asarray(molds, dtype=np.int64),
        np.asarray(instance.calendar.days_off, dtype=np.int8),
    )
