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

"""Hand-built instances small enough to reason about in a test."""

from dataclasses import replace

import numpy as np

from instance import Calendar, FlexibilityParams, Instance, WarmState
from evaluator import PlanSolution, plan_from_production


def tiny_instance(**changes) -> Instance:
    """Two tires with one item each on two presses over two macro-periods of
    two periods.

    Tire 0 only fits press 0 and needs 2 tires every period in class 1.
    Tire 1 fits both presses and needs 2 tires in class 2 every second
    period. Every rate is 2 with one mold per tire, so running item 0 on
    press 0 throughout and item 1 on press 1 in periods 1 and 2 serves all
    demand.
    """
    flexibility = FlexibilityParams(
        simultaneous_items=2,
        setups_per_period=2,
        setups_per_macro=4,
        endings_per_macro=2,
        min_run=1,
        setup_window=1,
        ending_window=1,
    )
    demand = np.zeros((2, 2, 4), dtype=np.int64)
    demand[0, 0, :] = 2
    demand[1, 1, 1] = 2
    demand[1, 1, 3] = 2
    instance = Instance(
        item_tire=np.array([0, 1]),
        item_workshop=np.array([0, 0]),
        demand=demand,
        initial_backorder=np.zeros((2, 2), dtype=np.int64),
        initial_inventory=np.array([0, 0]),
        inventory_min=np.zeros((2, 4), dtype=np.int64),
        inventory_max=np.full((2, 4), 10),
        molds=np.array([1, 1]),
        eligibility=np.array([[1, 0], [1, 1]]),
        rate=np.full((2, 4), 2),
        weight_target=np.zeros(4),
        tol_up_period=np.full(4, 100.0),
        tol_low_period=np.zeros(4),
        tol_up_macro=np.full(2, 1000.0),
        tol_low_macro=np.zeros(2),
        unit_weight=np.ones(2),
        workshop_cap=np.array([100.0]),
        unit_time=np.ones(2),
        drum_count=np.array([2]),
        drum_yield=np.ones((2, 1)),
        maintenance=np.ones((2, 4), dtype=np.int64),
        enforced=np.zeros((2, 2, 4), dtype=np.int64),
        enforced_molds=np.zeros((2, 4), dtype=np.int64),
        flexibility=flexibility,
        calendar=Calendar(2, np.zeros(4, dtype=np.int64)),
        class_weights=np.array([2.0, 1.0]),
        warm_state=WarmState.cold(2, 2, flexibility.depth),
        name="tiny",
    )
    return replace(instance, **changes) if changes else instance


def running_plan(instance: Instance, runs) -> PlanSolution:
    """Plan running item i on press p in each (i, p, t) of runs at full rate."""
    running = np.zeros((instance.N, instance.P, instance.T), dtype=np.int64)
    for i, p, t in runs:
        running[i, p, t] = 1
    production = running * instance.rate[:, None, :]
    return plan_from_production(instance, production, running)


def tiny_plan(instance: Instance | None = None) -> PlanSolution:
    """The plan serving all demand of tiny_instance."""
    instance = instance or tiny_instance()
    runs = [(0, 0, t) for t in range(4)] + [(1, 1, 1), (1, 1, 2)]
    return running_plan(instance, runs)


def dense_instance(N: int, P: int, T: int, W: int) -> Instance:
    """One item per tire, three classes, one drum type per press with every
    drum yield defined, a single macro-period."""
    flexibility = FlexibilityParams(
        simultaneous_items=N,
        setups_per_period=N * P,
        setups_per_macro=N * P * T,
        endings_per_macro=N * T,
        min_run=1,
        setup_window=1,
        ending_window=1,
    )
    return Instance(
        item_tire=np.arange(N),
        item_workshop=np.arange(N) % W,
        demand=np.ones((N, 3, T), dtype=np.int64),
        initial_backorder=np.zeros((N, 3), dtype=np.int64),
        initial_inventory=np.zeros(N, dtype=np.int64),
        inventory_min=np.zeros((N, T), dtype=np.int64),
        inventory_max=np.full((N, T), 5),
        molds=np.full(N, 2),
        eligibility=np.ones((N, P), dtype=np.int64),
        rate=np.full((N, T), 3),
        weight_target=np.full(T, 10.0),
        tol_up_period=np.full(T, 10.0),
        tol_low_period=np.full(T, 10.0),
        tol_up_macro=np.array([100.0]),
        tol_low_macro=np.array([100.0]),
        unit_weight=np.ones(N),
        workshop_cap=np.full(W, 1000.0),
        unit_time=np.ones(N),
        drum_count=np.full(P, 2),
        drum_yield=np.full((N, P), 2.0),
        maintenance=np.ones((P, T), dtype=np.int64),
        enforced=np.zeros((N, P, T), dtype=np.int64),
        enforced_molds=np.zeros((N, T), dtype=np.int64),
        flexibility=flexibility,
        calendar=Calendar(T, np.zeros(T, dtype=np.int64)),
        class_weights=np.array([3.0, 2.0, 1.0]),
        warm_state=WarmState.cold(N, P, flexibility.depth),
        name=f"dense-{N}-{P}-{T}-{W}",
    )


def random_tiny_instance(seed: int) -> Instance:
    """Random instance for exhaustive search: two items, two presses, three
    periods, two classes, no minimum stock and a loose maximum, so that the
    stock part of the objective only counts backorders."""
    rng = np.random.default_rng(seed)
    N, P, T = 2, 2, 3
    flexibility = FlexibilityParams(
        simultaneous_items=int(rng.integers(1, 3)),
        setups_per_period=int(rng.integers(1, 3)),
        setups_per_macro=int(rng.integers(2, 4)),
        endings_per_macro=1,
        min_run=1,
        setup_window=1,
        ending_window=1,
    )
    eligibility = (rng.random((N, P)) < 0.7).astype(np.int64)
    for a in range(N):
        if eligibility[a].sum() == 0:
            eligibility[a, rng.integers(0, P)] = 1
    return Instance(
        item_tire=np.arange(N),
        item_workshop=np.zeros(N, dtype=np.int64),
        demand=rng.integers(0, 4, size=(N, 2, T)),
        initial_backorder=rng.integers(0, 2, size=(N, 2)),
        initial_inventory=rng.integers(0, 3, size=N),
        inventory_min=np.zeros((N, T), dtype=np.int64),
        inventory_max=np.full((N, T), 10**6),
        molds=rng.integers(1, 3, size=N),
        eligibility=eligibility,
        rate=rng.integers(1, 4, size=(N, T)),
        weight_target=np.zeros(T),
        tol_up_period=rng.integers(2, 7, size=T).astype(np.float64),
        tol_low_period=np.zeros(T),
        tol_up_macro=np.array([100.0]),
        tol_low_macro=np.zeros(1),
        unit_weight=np.ones(N),
        workshop_cap=np.array([float(rng.integers(4, 13))]),
        unit_time=np.ones(N),
        drum_count=np.array([int(rng.integers(1, 3))]),
        drum_yield=rng.integers(1, 3, size=(N, 1)).astype(np.float64),
        maintenance=(rng.random((P, T)) >= 0.1).astype(np.int64),
        enforced=np.zeros((N, P, T), dtype=np.int64),
        enforced_molds=np.zeros((N, T), dtype=np.int64),
        flexibility=flexibility,
        calendar=Calendar(T, np.zeros(T, dtype=np.int64)),
        class_weights=np.array([2.0, 1.0]),
        warm_state=WarmState.cold(N, P, flexibility.depth),
        name=f"random-{seed}",
    )
