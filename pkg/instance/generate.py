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

"""Seeded synthetic instances with plant-like eligibility statistics."""

from dataclasses import dataclass, field

import numpy as np

from config import REFERENCE_FLEXIBILITY
from util import SizeSpecError, log

from .classes import Calendar, FlexibilityParams, Instance, WarmState


@dataclass(frozen=True)
class SizeSpec:
    tires: int
    items: int
    presses: int
    periods: int
    macros: int
    workshops: int = 4
    drums: int = 30
    classes: int = 3
    density: float = 0.32
    narrow_share: float = 0.17
    narrow_max: int = 10
    rate_range: tuple[int, int] = (4, 12)
    load_factor: float = 0.8
    stock_days: tuple[float, float] = (2.0, 6.0)
    maintenance_rate: float = 0.02
    days_off_per_macro: int = 0
    spec_share: float = 0.05
    min_molds: int = 2
    hot_start: bool = True
    flexibility: FlexibilityParams | None = field(default=None)

    @classmethod
    def full_scale(cls) -> "SizeSpec":
        return cls(tires=150, items=170, presses=70, periods=42, macros=6)

    @classmethod
    def small(cls) -> "SizeSpec":
        return cls(
            tires=8,
            items=10,
            presses=6,
            periods=14,
            macros=2,
            workshops=2,
            drums=3,
            density=0.5,
            narrow_share=0.0,
        )

    @classmethod
    def tiny(cls) -> "SizeSpec":
        return cls(
            tires=2,
            items=2,
            presses=2,
            periods=4,
            macros=1,
            workshops=1,
            drums=1,
            density=0.75,
            narrow_share=0.0,
            maintenance_rate=0.0,
            spec_share=0.0,
            hot_start=False,
            flexibility=FlexibilityParams(
                simultaneous_items=2,
                setups_per_period=2,
                setups_per_macro=4,
                endings_per_macro=2,
                min_run=1,
                setup_window=1,
                ending_window=1,
            ),
        )

    @property
    def periods_per_macro(self) -> int:
        return self.periods // self.macros

    def narrow_tires(self) -> int:
        if self.presses <= self.narrow_max:
            return self.tires
        return round(self.narrow_share * self.tires)

    def eligibility_bounds(self) -> tuple[int, int]:
        """Smallest and largest number of ones the row-count rules allow."""
        narrow = self.narrow_tires()
        wide = self.tires - narrow
        top = min(self.narrow_max, self.presses)
        low = narrow + wide * (self.narrow_max + 1)
        high = narrow * top + wide * self.presses
        return low, high

    def target_ones(self) -> int:
        return round(self.density * self.tires * self.presses)

    def check(self) -> None:
        for name in ("tires", "items", "presses", "periods", "macros", "workshops", "classes"):
            if getattr(self, name) < 1:
                raise SizeSpecError(f"{name} must be >= 1")
        if self.drums < 0:
            raise SizeSpecError("drums must be >= 0")
        if self.items < self.tires:
            raise SizeSpecError(f"{self.items} items cannot cover {self.tires} tires")
        if self.periods % self.macros != 0:
            raise SizeSpecError(
                f"{self.periods} periods do not split into {self.macros} macro-periods"
            )
        if not 0 <= self.days_off_per_macro < self.periods_per_macro:
            raise SizeSpecError("every macro-period needs at least one working day")
        if not 0.0 < self.density <= 1.0:
            raise SizeSpecError(f"density {self.density} is not in (0, 1]")
        if not 0.0 <= self.narrow_share <= 1.0:
            raise SizeSpecError(f"narrow share {self.narrow_share} is not in [0, 1]")
        low_rate, high_rate = self.rate_range
        if not 1 <= low_rate <= high_rate:
            raise SizeSpecError(f"rate range {self.rate_range} is not a valid interval")
        target = self.target_ones()
        if target < self.presses:
            raise SizeSpecError(
                f"density {self.density} gives {target} eligible pairs, "
                + f"fewer than the {self.presses} presses that must each be covered"
            )
        low, high = self.eligibility_bounds()
        if not low <= target <= high:
            raise SizeSpecError(
                f"density {self.density} gives {target} eligible pairs, but "
                + f"{self.narrow_tires()} narrow tires (<= {self.narrow_max} presses) "
                + f"allow only {low}..{high}"
            )


def _row_counts(rng: np.random.Generator, size: SizeSpec) -> np.ndarray:
    narrow = size.narrow_tires()
    top = min(size.narrow_max, size.presses)
    lower = np.full(size.tires, size.narrow_max + 1, dtype=np.int64)
    upper = np.full(size.tires, size.presses, dtype=np.int64)
    narrow_rows = rng.permutation(size.tires)[:narrow]
    lower[narrow_rows] = 1
    upper[narrow_rows] = top
    counts = rng.integers(lower, upper + 1)

    target = size.target_ones()
    while (surplus := int(counts.sum()) - target) != 0:
        movable = np.flatnonzero(counts > lower if surplus > 0 else counts < upper)
        picks = rng.choice(movable, size=min(abs(surplus), movable.size), replace=False)
        counts[picks] += -1 if surplus > 0 else 1
    return counts


def _eligibility(rng: np.random.Generator, size: SizeSpec) -> np.ndarray:
    counts = _row_counts(rng, size)
    matrix = np.zeros((size.tires, size.presses), dtype=np.int64)
    for a, count in enumerate(counts):
        matrix[a, rng.choice(size.presses, size=int(count), replace=False)] = 1

    # a column without ones is fed from a column with several, keeping row counts
    for q in np.flatnonzero(matrix.sum(axis=0) == 0):
        donors = np.flatnonzero(matrix.sum(axis=0) > 1)
        p = int(rng.choice(donors))
        a = int(rng.choice(np.flatnonzero(matrix[:, p] == 1)))
        matrix[a, p] = 0
        matrix[a, q] = 1
    return matrix


def _flexibility(size: SizeSpec, items: np.ndarray) -> FlexibilityParams:
    if size.flexibility is not None:
        return size.flexibility
    scale = min(1.0, size.presses / 70)

    def scaled(key: str) -> int:
        return max(1, round(REFERENCE_FLEXIBILITY[key] * scale))

    return FlexibilityParams(
        simultaneous_items=scaled("simultaneous_items"),
        setups_per_period=scaled("setups_per_period"),
        setups_per_macro=scaled("setups_per_macro"),
        endings_per_macro=scaled("endings_per_macro"),
        min_run=REFERENCE_FLEXIBILITY["min_run"],
        setup_window=REFERENCE_FLEXIBILITY["setup_window"],
        ending_window=REFERENCE_FLEXIBILITY["ending_window"],
        min_molds=size.min_molds if items.size else 0,
        spec_items=tuple(int(i) for i in items),
    )


def _hot_start(
    rng: np.random.Generator,
    size: SizeSpec,
    item_tire: np.ndarray,
    item_eligibility: np.ndarray,
    molds: np.ndarray,
    endings: int,
    depth: int,
) -> WarmState:
    warm = WarmState.cold(size.items, size.presses, depth)
    if not size.hot_start:
        return warm
    running = np.zeros_like(warm.running, dtype=np.int8)
    busy = np.zeros(size.presses, dtype=bool)
    used = np.zeros(size.tires, dtype=np.int64)
    wanted = max(1, round(0.8 * endings))
    for i in rng.permutation(size.items):
        if wanted == 0:
            break
        a = item_tire[i]
        if used[a] >= molds[a]:
            continue
        free = np.flatnonzero((item_eligibility[i] == 1) & ~busy)
        if free.size == 0:
            continue
        p = int(rng.choice(free))
        running[i, p, :] = 1
        busy[p] = True
        used[a] += 1
        wanted -= 1
    return WarmState(running, running.sum(axis=1).astype(np.int64), warm.days_off)


def generate(seed: int, size: SizeSpec) -> Instance:
    size.check()
    rng = np.random.default_rng(seed)
    A, N, P, T, H = size.tires, size.items, size.presses, size.periods, size.macros
    gamma, W, N_d = size.classes, size.workshops, size.drums
    log(f"generating instance: seed {seed}, {N} items, {P} presses, {T} periods")

    eligibility = _eligibility(rng, size)
    item_tire = np.concatenate(
        [np.arange(A), rng.integers(0, A, size=N - A)]
    ).astype(np.int64)
    item_tire = item_tire[rng.permutation(N)]
    item_workshop = rng.integers(0, W, size=N).astype(np.int64)
    item_eligibility = eligibility[item_tire, :]
    molds = np.array(
        [rng.integers(1, min(4, int(eligibility[a].sum())) + 1) for a in range(A)],
        dtype=np.int64,
    )

    days_off = np.zeros(T, dtype=np.int64)
    if size.days_off_per_macro:
        for h in range(H):
            end = (h + 1) * size.periods_per_macro
            days_off[end - size.days_off_per_macro : end] = 1
    working = 1 - days_off

    low_rate, high_rate = size.rate_range
    item_rate = rng.integers(low_rate, high_rate + 1, size=N)
    rate = np.outer(item_rate, working).astype(np.int64)

    # expected demand follows a share of the fleet's nominal output
    mean_rate = (low_rate + high_rate) / 2
    tire_share = rng.uniform(0.5, 1.5, size=A)
    tire_share /= tire_share.sum()
    per_period = size.load_factor * P * mean_rate * tire_share
    class_share = rng.dirichlet(np.full(gamma, 2.0), size=A)
    demand = rng.poisson(per_period[:, None, None] * class_share[:, :, None], size=(A, gamma, T))
    initial_backorder = rng.poisson(0.5 * per_period[:, None] * class_share)

    low_days, high_days = size.stock_days
    inventory_min = np.repeat(np.ceil(low_days * per_period)[:, None], T, axis=1).astype(np.int64)
    inventory_max = np.repeat(np.ceil(high_days * per_period)[:, None], T, axis=1).astype(np.int64)
    initial_inventory = rng.integers(0, inventory_max[:, 0] + 1).astype(np.int64)

    unit_weight = np.round(rng.uniform(0.2, 4.0, size=N), 3)
    weight_target = np.round(0.7 * P * mean_rate * unit_weight.mean() * working, 3)
    tol_up_period = weight_target.copy()
    tol_low_period = weight_target.copy()
    macro_target = weight_target.reshape(H, -1).sum(axis=1)

    unit_time = np.round(rng.uniform(0.5, 2.0, size=N), 3)
    peak = unit_time * item_rate * molds[item_tire] * size.periods_per_macro
    workshop_cap = np.array(
        [float(np.round(peak[item_workshop == w].sum(), 3)) for w in range(W)]
    )

    drum_yield = np.zeros((N, N_d))
    if N_d:
        drum_yield[np.arange(N), rng.integers(0, N_d, size=N)] = rng.integers(2, 5, size=N)
    drum_count = np.maximum(1, 2 * (drum_yield > 0).sum(axis=0)).astype(np.int64)

    maintenance = (rng.random((P, T)) >= size.maintenance_rate).astype(np.int64)

    candidates = np.flatnonzero(
        (molds[item_tire] >= size.min_molds) & (item_eligibility.sum(axis=1) >= size.min_molds)
    )
    spec_count = min(candidates.size, round(size.spec_share * N))
    spec_items = np.sort(rng.choice(candidates, size=spec_count, replace=False))
    flexibility = _flexibility(size, spec_items)

    warm_state = _hot_start(
        rng,
        size,
        item_tire,
        item_eligibility,
        molds,
        flexibility.endings_per_macro,
        flexibility.depth,
    )

    return Instance(
        item_tire=item_tire,
        item_workshop=item_workshop,
        demand=demand.astype(np.int64),
        initial_backorder=initial_backorder.astype(np.int64),
        initial_inventory=initial_inventory,
        inventory_min=inventory_min,
        inventory_max=inventory_max,
        molds=molds,
        eligibility=eligibility,
        rate=rate,
        weight_target=weight_target,
        tol_up_period=tol_up_period,
        tol_low_period=tol_low_period,
        tol_up_macro=macro_target,
        tol_low_macro=macro_target.copy(),
        unit_weight=unit_weight,
        workshop_cap=workshop_cap,
        unit_time=unit_time,
        drum_count=drum_count,
        drum_yield=drum_yield,
        maintenance=maintenance,
        enforced=np.zeros((N, P, T), dtype=np.int64),
        enforced_molds=np.zeros((N, T), dtype=np.int64),
        flexibility=flexibility,
        calendar=Calendar(size.periods_per_macro, days_off),
        class_weights=np.arange(gamma, 0, -1, dtype=np.float64),
        warm_state=warm_state,
        name=f"synthetic-{seed}",
    )
