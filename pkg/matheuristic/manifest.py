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

import json

from config import RunConfig

from .week import WeekResult


def config_entry(config: RunConfig) -> dict:
    weights = config.weights
    return {
        "lssp_time_limit": config.lssp_time_limit,
        "assp_time_limit": config.assp_time_limit,
        "pool_size": config.pool_size,
        "threshold": config.threshold,
        "relative_tolerance": config.relative_tolerance,
        "emphasis": config.emphasis,
        "solver": config.profile.name,
        "gap": config.gap,
        "threads": config.threads,
        "workers": config.workers,
        "compact": config.compact,
        "frozen_macros": config.frozen_macros,
        "weights": None
        if weights is None
        else {
            "classes": list(weights.classes),
            "overstock": weights.overstock,
            "understock": weights.understock,
        },
    }


def week_entry(week: WeekResult) -> dict:
    return {
        "macro": week.macro + 1,
        "rank": week.rank,
        "pool_size": week.pool_size,
        "lssp_objective": week.lssp_objective,
        "deviation": week.deviation,
        "degraded": week.degraded,
        "frozen": week.frozen,
        "statuses": list(week.statuses),
        "timings": {name: round(seconds, 3) for name, seconds in week.timings.items()},
    }


def build_manifest(
    config: RunConfig, weeks: list[WeekResult], instance_name: str, status: str = "ok", **extra
) -> dict:
    return {
        "instance": instance_name,
        "status": status,
        "config": config_entry(config),
        "weeks": [week_entry(week) for week in weeks],
        **extra,
    }


def write_manifest(manifest: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as writer:
        json.dump(manifest, writer, indent=2)
        writer.write("\n")
