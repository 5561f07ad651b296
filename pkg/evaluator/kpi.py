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

from dataclasses import dataclass

import numpy as np
import pandas as pd

from config import ObjectiveWeights
from instance import Instance
from models.weights import Normalizers, compute_normalizers, objective_coefficients
from util import CustomException

from .plan import PlanSolution

KPI_COLUMNS = ("OF", "BC1", "BC2", "BC3", "BT", "OS", "US", "Z")


@dataclass(frozen=True)
class KpiReport:
    """Backorders per class, their total, the stock deviations and the
    weighted objective, all summed over the horizon.

    OF is the normalised objective the models minimise, Z the same terms
    without normalisation.
    """

    backorders: tuple[float, ...]
    OS: float
    US: float
    OF: float
    Z: float = 0.0

    @property
    def BT(self) -> float:
        return float(sum(self.backorders))

    def backorder(self, c: int) -> float:
        return self.backorders[c] if c < len(self.backorders) else 0.0

    @property
    def BC1(self) -> float:
        return self.backorder(0)

    @property
    def BC2(self) -> float:
        return self.backorder(1)

    @property
    def BC3(self) -> float:
        return self.backorder(2)

    def as_row(self) -> dict[str, float]:
        row = {"OF": self.OF}
        for c, value in enumerate(self.backorders):
            row[f"BC{c + 1}"] = value
        row.update({"BT": self.BT, "OS": self.OS, "US": self.US, "Z": self.Z})
        return row

    def __add__(self, other: "KpiReport") -> "KpiReport":
        return KpiReport(
            tuple(a + b for a, b in zip(self.backorders, other.backorders)),
            self.OS + other.OS,
            self.US + other.US,
            self.OF + other.OF,
            self.Z + other.Z,
        )


def stock_deviations(instance: Instance, inventory: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    overstock = np.maximum(0, inventory - instance.inventory_max)
    understock = np.maximum(0, instance.inventory_min - inventory)
    return overstock, understock


def compute_kpis(
    instance: Instance,
    plan: PlanSolution,
    weights: ObjectiveWeights,
    normalizers: Normalizers | None = None,
) -> KpiReport:
    if normalizers is None:
        normalizers = compute_normalizers(instance)
    class_coef, over_coef, under_coef = objective_coefficients(weights, normalizers)
    backorders = tuple(float(plan.backorder[:, c, :].sum()) for c in range(instance.gamma))
    overstock, understock = stock_deviations(instance, plan.inventory)
    OS, US = float(overstock.sum()), float(understock.sum())
    OF = sum(k * b for k, b in zip(class_coef, backorders)) + over_coef * OS + under_coef * US
    Z = (
        sum(w * b for w, b in zip(weights.classes, backorders))
        + weights.overstock * OS
        + weights.understock * US
    )
    return KpiReport(backorders, OS, US, float(OF), float(Z))


def contributions(
    report: KpiReport, weights: ObjectiveWeights, normalizers: Normalizers
) -> dict[str, float]:
    """Share of OF taken by each weighted objective term, in percent."""
    class_coef, over_coef, under_coef = objective_coefficients(weights, normalizers)
    terms = {f"BC{c + 1}": k * b for c, (k, b) in enumerate(zip(class_coef, report.backorders))}
    terms["OS"] = over_coef * report.OS
    terms["US"] = under_coef * report.US
    total = sum(terms.values())
    if total == 0:
        return {name: 0.0 for name in terms}
    return {name: 100.0 * value / total for name, value in terms.items()}


def kpi_frame(reports: dict[str, KpiReport]) -> pd.DataFrame:
    rows = [{"name": name, **report.as_row()} for name, report in reports.items()]
    return pd.DataFrame(rows)


def write_kpis(reports: dict[str, KpiReport], path: str) -> None:
    kpi_frame(reports).to_csv(path, index=False)


def read_kpis(path: str) -> pd.DataFrame:
    """KPI rows indexed by name; the CSV needs a name column and KPI columns."""
    try:
        frame = pd.read_csv(path)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as error:
        raise CustomException(f"could not read KPI file {path}: {error}") from error
    if "name" not in frame.columns:
        raise CustomException(f"KPI file {path} has no 'name' column")
    if not any(column in KPI_COLUMNS for column in frame.columns):
        raise CustomException(f"KPI file {path} has none of the columns {', '.join(KPI_COLUMNS)}")
    frame["name"] = frame["name"].astype(str)
    return frame.set_index("name")
