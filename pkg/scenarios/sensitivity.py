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

"""Eligibility sensitivity study: every scenario runs under every initial
inventory configuration and is compared with the reference scenario under
the same configuration."""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import pandas as pd

from config import REFERENCE_SCENARIO, InventoryConfig, RunConfig, ScenarioSpec
from evaluator import KpiReport, compare, compute_kpis
from evaluator.compare import NA
from instance import Instance
from matheuristic import run_rolling_horizon, run_weights
from util import CustomException, log, warn

from .restrict import restrict_eligibility, scale_inventory

SCENARIO_KPIS = ("BC1", "OS", "BT", "US")


def matheuristic_run(config: RunConfig) -> Callable[[Instance], KpiReport]:
    def run(instance: Instance) -> KpiReport:
        result = run_rolling_horizon(instance, config)
        return compute_kpis(instance, result.plan, run_weights(instance, config))

    return run


def _record(spec, inventory, report: KpiReport | None, error: str) -> dict:
    record = {
        "scenario": spec.name,
        "configuration": inventory.name,
        "status": "failed" if report is None else "ok",
    }
    for kpi in SCENARIO_KPIS:
        record[kpi] = None if report is None else getattr(report, kpi)
    record["OF"] = None if report is None else report.OF
    record["error"] = error
    return record


def run_sensitivity(
    base: Instance,
    specs: list[ScenarioSpec],
    inventory_configs: list[InventoryConfig],
    config: RunConfig,
    run_fn: Callable[[Instance], KpiReport] | None = None,
    reference: str = REFERENCE_SCENARIO,
) -> pd.DataFrame:
    """One row per (scenario, configuration) with KPI values and gaps in
    percent against the reference scenario; NA where the reference is 0."""
    if reference not in [spec.name for spec in specs]:
        raise CustomException(f"scenario list lacks the reference scenario {reference}")
    run_fn = run_fn or matheuristic_run(config)

    def job(pair):
        spec, inventory = pair
        try:
            instance = scale_inventory(
                restrict_eligibility(base, spec.items, spec.presses), inventory.multiplier
            )
            report = run_fn(instance)
        except CustomException as error:
            warn(f"scenario {spec.name} / {inventory.name} failed: {error}")
            return _record(spec, inventory, None, str(error))
        log(f"scenario {spec.name} / {inventory.name}: OF {report.OF:.6g}")
        return _record(spec, inventory, report, "")

    pairs = [(spec, inventory) for spec in specs for inventory in inventory_configs]
    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            records = list(executor.map(job, pairs))
    else:
        records = [job(pair) for pair in pairs]
    return add_gaps(pd.DataFrame(records), reference)


def add_gaps(frame: pd.DataFrame, reference: str = REFERENCE_SCENARIO) -> pd.DataFrame:
    frame = frame.copy()
    for kpi in SCENARIO_KPIS:
        frame[f"gap_{kpi}"] = None
    for index, row in frame.iterrows():
        base = frame[
            (frame["scenario"] == reference) & (frame["configuration"] == row["configuration"])
        ]
        if base.empty or row["status"] != "ok" or base.iloc[0]["status"] != "ok":
            continue
        gaps = compare(
            {k: base.iloc[0][k] for k in SCENARIO_KPIS},
            {k: row[k] for k in SCENARIO_KPIS},
            SCENARIO_KPIS,
        )
        for kpi in SCENARIO_KPIS:
            frame.at[index, f"gap_{kpi}"] = NA if gaps[kpi] is None else gaps[kpi]
    return frame


def kpi_table(
    frame: pd.DataFrame, kpi: str, reference: str = REFERENCE_SCENARIO
) -> pd.DataFrame:
    """Scenarios by configuration for one KPI, each cell 'value (gap%)' as
    in a sensitivity report; the reference row carries values only."""

    def cell(row) -> str:
        if row["status"] != "ok":
            return "failed"
        value = f"{row[kpi]:.12g}"
        if row["scenario"] == reference:
            return value
        gap = row[f"gap_{kpi}"]
        if isinstance(gap, str):
            return f"{value} ({gap})"
        if gap is None or pd.isna(gap):
            return value
        return f"{value} ({int((gap + 0.5) // 1)}%)"

    cells = frame.assign(cell=frame.apply(cell, axis=1))
    return cells.pivot(index="scenario", columns="configuration", values="cell")


def write_sensitivity(frame: pd.DataFrame, path: str) -> None:
    frame.to_csv(path, index=False)
