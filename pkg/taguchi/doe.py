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

"""Weight calibration over the rows of the orthogonal array.

Every row fixes one level per objective weight. A row's response is the
objective value of the plan found with those weights, scored with the
smaller-is-better signal-to-noise ratio.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
import pandas as pd

from config import FACTOR_NAMES, FactorLevels, ObjectiveWeights
from evaluator import KpiReport, contributions
from instance import Instance
from models.weights import compute_normalizers
from util import CustomException, log, warn

from .array import l16_array

RANKING_KEYS = ("BC1", "OS", "BC2", "BC3", "US")


def sn_ratio(responses) -> float:
    values = np.asarray(responses, dtype=np.float64)
    if values.size == 0:
        raise CustomException("S/N ratio needs at least one response")
    if (values < 0).any():
        raise CustomException("S/N ratio needs non-negative responses")
    mean_square = float(np.sum(values**2) / values.size)
    if mean_square == 0:
        raise CustomException("S/N ratio is undefined for all-zero responses")
    return -10.0 * np.log10(mean_square)


@dataclass(frozen=True)
class DoeRow:
    row: int
    levels: tuple[int, ...]
    weights: ObjectiveWeights
    reports: tuple[KpiReport, ...] = ()
    sn: float | None = None
    error: str = ""

    @property
    def failed(self) -> bool:
        return self.sn is None

    @property
    def report(self) -> KpiReport | None:
        return self.reports[0] if self.reports else None


@dataclass
class DoeResult:
    rows: list[DoeRow]
    effects: pd.DataFrame
    shares: dict = field(default_factory=dict)

    @property
    def best(self) -> DoeRow | None:
        done = [row for row in self.rows if not row.failed]
        if not done:
            return None
        return max(done, key=lambda row: (row.sn, -row.row))


def main_effects(array: np.ndarray, sn: list[float | None]) -> pd.DataFrame:
    """Mean S/N per factor and level over the rows that succeeded."""
    records = []
    for column, name in enumerate(FACTOR_NAMES):
        for level in range(1, 5):
            values = [
                value for value, row in zip(sn, array) if value is not None and row[column] == level
            ]
            records.append(
                {
                    "factor": name,
                    "level": level,
                    "mean_sn": float(np.mean(values)) if values else float("nan"),
                }
            )
    return pd.DataFrame(records, columns=["factor", "level", "mean_sn"])


def _run_row(
    row: int, levels: tuple[int, ...], weights: ObjectiveWeights, run_fn, replicates: int
) -> DoeRow:
    try:
        reports = tuple(run_fn(weights) for _ in range(replicates))
        sn = sn_ratio([report.OF for report in reports])
    except CustomException as error:
        warn(f"design row {row}: {error}")
        return DoeRow(row, levels, weights, error=str(error))
    log(f"design row {row}: OF {reports[0].OF:.6g}, S/N {sn:.4f} dB")
    return DoeRow(row, levels, weights, reports, sn)


def run_doe(
    instance: Instance,
    levels: FactorLevels,
    run_fn: Callable[[ObjectiveWeights], KpiReport],
    replicates: int = 1,
    workers: int = 1,
) -> DoeResult:
    array = l16_array()
    jobs = [
        (k + 1, tuple(int(v) for v in row), levels.weights_for(row)) for k, row in enumerate(array)
    ]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            rows = list(
                executor.map(lambda job: _run_row(*job, run_fn, replicates), jobs)
            )
    else:
        rows = [_run_row(*job, run_fn, replicates) for job in jobs]

    failed = [row.row for row in rows if row.failed]
    if failed:
        warn(f"design rows {', '.join(map(str, failed))} failed and are left out of the effects")

    normalizers = compute_normalizers(instance)
    shares = {
        row.row: contributions(row.report, row.weights, normalizers)
        for row in rows
        if not row.failed
    }
    return DoeResult(rows, main_effects(array, [row.sn for row in rows]), shares)


def _ranking_key(report) -> tuple:
    if isinstance(report, KpiReport):
        row = report.as_row()
        return tuple(row.get(name, 0.0) for name in RANKING_KEYS)
    return tuple(report)


def rank_by_company_rules(reports) -> list[int]:
    """Positions of the reports sorted lexicographically on
    (BC1, OS, BC2, BC3, US); equal tuples keep their order."""
    keys = [_ranking_key(report) for report in reports]
    return sorted(range(len(keys)), key=lambda k: keys[k])


def doe_frame(result: DoeResult) -> pd.DataFrame:
    records = []
    for row in result.rows:
        record = {"row": row.row, "levels": "-".join(str(v) for v in row.levels)}
        if row.report is not None:
            record.update(row.report.as_row())
        record["SN"] = row.sn
        for name, share in result.shares.get(row.row, {}).items():
            record[f"share_{name}"] = share
        record["error"] = row.error
        records.append(record)
    return pd.DataFrame(records)


def write_doe(result: DoeResult, report_path: str, effects_path: str) -> None:
    doe_frame(result).to_csv(report_path, index=False)
    result.effects.to_csv(effects_path, index=False)
