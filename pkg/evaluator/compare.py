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

"""Percentage gaps between KPI reports.

A gap is (other - reference) / reference in percent, so a negative gap
means the other plan has less of that KPI. A zero reference gives NA.
"""

import math
from dataclasses import dataclass

import pandas as pd

from util import DimensionError

from .kpi import KpiReport

NA = "NA"
GAP_KPIS = ("OF", "BC1", "OS", "BC2", "BC3", "BT", "US")
SUMMARY_ROWS = ("Mean", "Std. Dev.", "Min", "Max")


@dataclass(frozen=True)
class GapReport:
    gaps: dict

    def __getitem__(self, kpi: str) -> float | None:
        return self.gaps[kpi]

    def rounded(self) -> dict[str, int | str]:
        """Gaps as printed in reports: whole percents, NA on zero reference."""
        return {
            kpi: NA if gap is None else int(math.floor(gap + 0.5)) for kpi, gap in self.gaps.items()
        }


def _row(report) -> dict[str, float]:
    if isinstance(report, KpiReport):
        return report.as_row()
    if isinstance(report, pd.Series):
        return report.dropna().to_dict()
    return dict(report)


def gap(reference: float, other: float) -> float | None:
    if reference == 0:
        return None
    return 100.0 * (other - reference) / reference


def compare(reference, other, kpis: tuple[str, ...] | None = None) -> GapReport:
    a, b = _row(reference), _row(other)
    names = kpis if kpis is not None else tuple(k for k in GAP_KPIS if k in a and k in b)
    missing = [k for k in names if k not in a or k not in b]
    if missing:
        raise DimensionError(f"KPI {', '.join(missing)} missing from one of the reports")
    return GapReport({k: gap(float(a[k]), float(b[k])) for k in names})


def compare_many(references: pd.DataFrame, others: pd.DataFrame) -> pd.DataFrame:
    """Per-row gaps for every dataset in both frames plus summary rows.

    NA cells are left out of the summary statistics.
    """
    shared = [name for name in references.index if name in others.index]
    if not shared:
        raise DimensionError("the KPI files share no dataset name")
    kpis = tuple(
        k for k in GAP_KPIS if k in references.columns and k in others.columns
    )
    rows = {
        name: compare(references.loc[name], others.loc[name], kpis).gaps for name in shared
    }
    frame = pd.DataFrame.from_dict(rows, orient="index", columns=list(kpis)).astype(float)
    summary = pd.DataFrame(
        [frame.mean(), frame.std(), frame.min(), frame.max()], index=list(SUMMARY_ROWS)
    )
    return pd.concat([frame, summary])


def format_gaps(frame: pd.DataFrame) -> pd.DataFrame:
    """Gap table with whole-percent cells and NA for undefined gaps."""
    return frame.apply(
        lambda column: column.map(lambda v: NA if pd.isna(v) else int(math.floor(v + 0.5)))
    )
