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

"""Problem data of the tire-curing planning problem.

Arrays are indexed from 0: item i, tire a, press p, class c, period t.
Period position 0 is the first micro-period of the horizon. The warm state
holds the periods before it, oldest first, so its last column is the period
right before the horizon.
"""

from dataclasses import dataclass, fields

import numpy as np


def _frozen_array(value, dtype=None) -> np.ndarray:
    array = np.array(value, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class Calendar:
    periods_per_macro: int
    days_off: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "days_off", _frozen_array(self.days_off))

    @property
    def T(self) -> int:
        return int(self.days_off.shape[0])

    @property
    def H(self) -> int:
        if self.periods_per_macro <= 0:
            return 0
        return self.T // self.periods_per_macro

    def macro_periods(self, h: int) -> range:
        return range(h * self.periods_per_macro, (h + 1) * self.periods_per_macro)

    def macro_of(self, t: int) -> int:
        return t // self.periods_per_macro


@dataclass(frozen=True)
class FlexibilityParams:
    simultaneous_items: int
    setups_per_period: int
    setups_per_macro: int
    endings_per_macro: int
    min_run: int
    setup_window: int
    ending_window: int
    min_molds: int = 0
    spec_items: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "spec_items", tuple(int(i) for i in self.spec_items))

    @property
    def depth(self) -> int:
        # one period beyond the deepest look-back so that start indicators
        # of the oldest looked-at period can still be derived
        return max(self.min_run, self.setup_window, self.ending_window) + 1


@dataclass(frozen=True)
class WarmState:
    running: np.ndarray
    molds: np.ndarray
    days_off: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "running", _frozen_array(self.running))
        object.__setattr__(self, "molds", _frozen_array(self.molds))
        object.__setattr__(self, "days_off", _frozen_array(self.days_off))

    @classmethod
    def cold(cls, items: int, presses: int, depth: int) -> "WarmState":
        return cls(
            np.zeros((items, presses, depth), dtype=np.int8),
            np.zeros((items, depth), dtype=np.int64),
            np.zeros(depth, dtype=np.int8),
        )

    @property
    def depth(self) -> int:
        return int(self.days_off.shape[0])

    def rolled(self, running, molds, days_off) -> "WarmState":
        """Append the periods of a finished macro-period and keep the newest."""
        depth = self.depth
        return WarmState(
            np.concatenate([self.running, running], axis=2)[:, :, -depth:],
            np.concatenate([self.molds, molds], axis=1)[:, -depth:],
            np.concatenate([self.days_off, days_off])[-depth:],
        )


INTEGER_FIELDS = (
    "item_tire",
    "item_workshop",
    "demand",
    "initial_backorder",
    "initial_inventory",
    "inventory_min",
    "inventory_max",
    "molds",
    "rate",
    "drum_count",
    "enforced_molds",
)
FLAG_FIELDS = ("eligibility", "maintenance", "enforced")
FLOAT_FIELDS = (
    "weight_target",
    "tol_up_period",
    "tol_low_period",
    "tol_up_macro",
    "tol_low_macro",
    "unit_weight",
    "workshop_cap",
    "unit_time",
    "drum_yield",
    "class_weights",
)


@dataclass(frozen=True)
class Instance:
    item_tire: np.ndarray
    item_workshop: np.ndarray
    demand: np.ndarray
    initial_backorder: np.ndarray
    initial_inventory: np.ndarray
    inventory_min: np.ndarray
    inventory_max: np.ndarray
    molds: np.ndarray
    eligibility: np.ndarray
    rate: np.ndarray
    weight_target: np.ndarray
    tol_up_period: np.ndarray
    tol_low_period: np.ndarray
    tol_up_macro: np.ndarray
    tol_low_macro: np.ndarray
    unit_weight: np.ndarray
    workshop_cap: np.ndarray
    unit_time: np.ndarray
    drum_count: np.ndarray
    drum_yield: np.ndarray
    maintenance: np.ndarray
    enforced: np.ndarray
    enforced_molds: np.ndarray
    flexibility: FlexibilityParams
    calendar: Calendar
    class_weights: np.ndarray
    warm_state: WarmState
    name: str = "instance"

    def __post_init__(self) -> None:
        for item in fields(self):
            value = getattr(self, item.name)
            if item.name in INTEGER_FIELDS + FLAG_FIELDS + FLOAT_FIELDS:
                object.__setattr__(self, item.name, _frozen_array(value))

    @property
    def A(self) -> int:
        return int(self.initial_inventory.shape[0])

    @property
    def N(self) -> int:
        return int(self.item_tire.shape[0])

    @property
    def P(self) -> int:
        return int(self.eligibility.shape[1])

    @property
    def W(self) -> int:
        return int(self.workshop_cap.shape[0])

    @property
    def N_d(self) -> int:
        return int(self.drum_count.shape[0])

    @property
    def gamma(self) -> int:
        return int(self.demand.shape[1])

    @property
    def T(self) -> int:
        return self.calendar.T

    @property
    def H(self) -> int:
        return self.calendar.H

    def tire_items(self, a: int) -> np.ndarray:
        return np.flatnonzero(self.item_tire == a)

    def workshop_items(self, w: int) -> np.ndarray:
        return np.flatnonzero(self.item_workshop == w)

    def drum_items(self, d: int) -> np.ndarray:
        return np.flatnonzero(self.drum_yield[:, d] > 0)

    def item_eligibility(self) -> np.ndarray:
        """Eligibility expanded to items, shape (N, P)."""
        return self.eligibility[self.item_tire, :]

    @property
    def initial_overstock(self) -> np.ndarray:
        return np.maximum(0, self.initial_inventory - self.inventory_max[:, 0])

    @property
    def initial_understock(self) -> np.ndarray:
        return np.maximum(0, self.inventory_min[:, 0] - self.initial_inventory)

    def big_m(self) -> float:
        return max(
            float(self.rate.max(initial=0)), float(self.molds.max(initial=0)), 2.0
        )
