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

from config import ObjectiveWeights
from instance import Instance
from util import DimensionError


@dataclass(frozen=True)
class Normalizers:
    classes: tuple[float, ...]
    overstock: float
    understock: float


def _guarded(value: float) -> float:
    return float(value) if value != 0 else 1.0


def compute_normalizers(instance: Instance) -> Normalizers:
    raw_classes = instance.initial_backorder.sum(axis=0) + instance.demand.sum(axis=(0, 2))
    classes = tuple(_guarded(value) for value in raw_classes)

    # mean rate over the items of a tire and the horizon
    mean_rate = np.array(
        [
            instance.rate[instance.tire_items(a)].mean() if instance.tire_items(a).size else 0.0
            for a in range(instance.A)
        ]
    )
    overstock = instance.initial_overstock.sum() + (
        instance.molds * mean_rate * instance.T
    ).sum()
    understock = instance.initial_understock.sum() + raw_classes.sum()
    return Normalizers(classes, _guarded(overstock), _guarded(understock))


def objective_coefficients(
    weights: ObjectiveWeights, normalizers: Normalizers
) -> tuple[tuple[float, ...], float, float]:
    """Per-unit objective coefficients lambda / mu of backorders by class,
    overstock and understock."""
    if len(weights.classes) != len(normalizers.classes):
        raise DimensionError(
            f"{len(weights.classes)} class weights for {len(normalizers.classes)} classes"
        )
    return (
        tuple(w / m for w, m in zip(weights.classes, normalizers.classes)),
        weights.overstock / normalizers.overstock,
        weights.understock / normalizers.understock,
    )
