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

"""One macro-period of the two-stage heuristic.

The lot-sizing model yields a pool of plans. Each is handed, best first, to
the assignment model until one places its quantities within the acceptance
threshold.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from config import ObjectiveWeights, RunConfig
from evaluator import PlanSolution, fill_inventory, stock_deviations
from instance import Instance, WarmState, with_initial_state
from milp import solve, solve_pool
from models import (
    AsspResult,
    BuildOptions,
    LsspPlan,
    accept,
    build_assp,
    build_lssp,
    build_rebalance,
    decode_assignment,
    decode_rebalance,
    extract_pool,
    pattern_ids,
)
from util import CustomException, WeekFailure, log, warn


@dataclass(frozen=True)
class WeekResult:
    macro: int
    rank: int
    lssp_objective: float | None
    deviation: float
    plan: PlanSolution
    timings: dict = field(default_factory=dict)
    degraded: bool = False
    frozen: bool = False
    statuses: tuple[str, ...] = ()
    pool_size: int = 1


def run_weights(instance: Instance, config: RunConfig) -> ObjectiveWeights:
    if config.weights is not None:
        return config.weights
    return ObjectiveWeights.calibrated(instance.gamma)


def _assign(instance: Instance, entry: LsspPlan, config: RunConfig) -> AsspResult:
    model = build_assp(instance, entry, BuildOptions(compact=config.compact))
    return decode_assignment(instance, model, solve(model, config.assp_solver()))


def _inventory(
    instance: Instance, entry: LsspPlan, chosen: AsspResult, config: RunConfig
) -> PlanSolution:
    if round(chosen.deviation) == 0:
        return PlanSolution(
            chosen.production,
            chosen.running,
            entry.inventory,
            entry.backorder,
            entry.overstock,
            entry.understock,
        )
    log(f"re-balancing inventory for an assignment off by {chosen.deviation:g} tires")
    weights = run_weights(instance, config)
    try:
        model = build_rebalance(instance, chosen.production, weights)
        raw = solve(model, config.assp_solver())
        if raw.has_values:
            inventory, backorder, overstock, understock = decode_rebalance(instance, model, raw)
            return PlanSolution(
                chosen.production, chosen.running, inventory, backorder, overstock, understock
            )
        warn(f"re-balancing ended {raw.status}, falling back to priority allocation")
    except CustomException as error:
        warn(f"re-balancing failed ({error}), falling back to priority allocation")
    inventory, backorder = fill_inventory(instance, chosen.production)
    overstock, understock = stock_deviations(instance, inventory)
    return PlanSolution(
        chosen.production, chosen.running, inventory, backorder, overstock, understock
    )


def _first_acceptable(
    instance: Instance, pool: list[LsspPlan], config: RunConfig
) -> tuple[list[AsspResult], int | None]:
    """Assignments tried in pool order and the rank of the first acceptable one."""

    def acceptable(entry: LsspPlan, result: AsspResult) -> bool:
        return accept(result, config.threshold, config.relative_tolerance, entry.total)

    if config.workers > 1 and len(pool) > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            results = list(executor.map(lambda entry: _assign(instance, entry, config), pool))
        for rank, (entry, result) in enumerate(zip(pool, results)):
            if acceptable(entry, result):
                return results, rank
        return results, None

    results = []
    for rank, entry in enumerate(pool):
        result = _assign(instance, entry, config)
        results.append(result)
        if acceptable(entry, result):
            return results, rank
        log(
            f"pool entry {rank + 1}: assignment {result.status}"
            + ("" if result.deviation is None else f", off by {result.deviation:g}"),
            color="yellow",
        )
    return results, None


def solve_week(
    instance: Instance,
    config: RunConfig,
    warm_state: WarmState | None = None,
    macro: int = 0,
) -> WeekResult:
    if warm_state is not None:
        instance = with_initial_state(instance, warm_state=warm_state)
    weights = run_weights(instance, config)
    timings = {}

    start = time.perf_counter()
    lssp = build_lssp(instance, weights)
    pool = solve_pool(lssp, config.lssp_solver(), config.pool_size, pattern_ids(instance))
    entries = extract_pool(instance, lssp, pool, weights)
    timings["lssp"] = time.perf_counter() - start
    if not entries:
        raise WeekFailure(
            f"lot-sizing model ended {pool.status}", macro, statuses=[pool.status]
        )

    start = time.perf_counter()
    results, rank = _first_acceptable(instance, entries, config)
    timings["assp"] = time.perf_counter() - start
    statuses = tuple(result.status for result in results)

    degraded = rank is None
    if degraded:
        placed = [(r.deviation, k) for k, r in enumerate(results) if r.has_plan]
        if not placed:
            raise WeekFailure(
                "no pool entry could be assigned to presses", macro, statuses=list(statuses)
            )
        rank = min(placed)[1]
        warn(
            f"macro-period {macro + 1}: no assignment accepted, keeping pool entry "
            + f"{rank + 1} off by {results[rank].deviation:g}"
        )

    start = time.perf_counter()
    plan = _inventory(instance, entries[rank], results[rank], config)
    timings["rebalance"] = time.perf_counter() - start

    log(
        f"macro-period {macro + 1}: pool entry {rank + 1} of {len(entries)}, "
        + f"deviation {results[rank].deviation:g}"
    )
    return WeekResult(
        macro,
        rank,
        entries[rank].objective,
        float(results[rank].deviation),
        plan,
        timings,
        degraded,
        False,
        statuses,
        len(entries),
    )
