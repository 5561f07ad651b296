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

from util import InstanceError

from .classes import FLAG_FIELDS, INTEGER_FIELDS, Instance


@dataclass(frozen=True)
class ValidationError:
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


def _where(array: np.ndarray) -> list[tuple]:
    return [tuple(int(k) for k in index) for index in np.argwhere(array)]


def _path(name: str, index: tuple) -> str:
    return name + "".join(f"[{k}]" for k in index)


class _Collector:
    def __init__(self) -> None:
        self.errors: list[ValidationError] = []

    def add(self, path: str, message: str) -> None:
        self.errors.append(ValidationError(path, message))

    def each(self, name: str, mask: np.ndarray, message: str) -> None:
        for index in _where(mask):
            self.add(_path(name, index), message)


def _check_shapes(instance: Instance, out: _Collector) -> bool:
    A, N, P, T = instance.A, instance.N, instance.P, instance.T
    gamma, W, N_d = instance.gamma, instance.W, instance.N_d
    H = instance.H
    depth = instance.flexibility.depth
    expected = {
        "item_tire": (N,),
        "item_workshop": (N,),
        "demand": (A, gamma, T),
        "initial_backorder": (A, gamma),
        "initial_inventory": (A,),
        "inventory_min": (A, T),
        "inventory_max": (A, T),
        "molds": (A,),
        "eligibility": (A, P),
        "rate": (N, T),
        "weight_target": (T,),
        "tol_up_period": (T,),
        "tol_low_period": (T,),
        "tol_up_macro": (H,),
        "tol_low_macro": (H,),
        "unit_weight": (N,),
        "workshop_cap": (W,),
        "unit_time": (N,),
        "drum_count": (N_d,),
        "drum_yield": (N, N_d),
        "maintenance": (P, T),
        "enforced": (N, P, T),
        "enforced_molds": (N, T),
        "class_weights": (gamma,),
    }
    ok = True
    for name, shape in expected.items():
        actual = getattr(instance, name).shape
        if actual != shape:
            out.add(name, f"shape {actual} does not match expected {shape}")
            ok = False

    warm = instance.warm_state
    for name, shape in (
        ("warm_state.running", (N, P, depth)),
        ("warm_state.molds", (N, depth)),
        ("warm_state.days_off", (depth,)),
    ):
        actual = getattr(warm, name.split(".")[1]).shape
        if actual != shape:
            out.add(name, f"shape {actual} does not match expected {shape}")
            ok = False
    return ok


def _check_calendar(instance: Instance, out: _Collector) -> bool:
    calendar = instance.calendar
    if calendar.periods_per_macro <= 0:
        out.add("calendar.periods_per_macro", "must be >= 1")
        return False
    if calendar.T == 0 or calendar.T % calendar.periods_per_macro != 0:
        out.add(
            "calendar.days_off",
            f"{calendar.T} periods do not split into macro-periods "
            + f"of {calendar.periods_per_macro}",
        )
        return False
    return True


def _check_flexibility(instance: Instance, out: _Collector) -> None:
    flexibility = instance.flexibility
    for name in (
        "simultaneous_items",
        "setups_per_period",
        "setups_per_macro",
        "endings_per_macro",
        "setup_window",
        "ending_window",
        "min_molds",
    ):
        if getattr(flexibility, name) < 0:
            out.add(f"flexibility.{name}", "must be >= 0")
    if flexibility.min_run < 1:
        out.add("flexibility.min_run", "must be >= 1")
    for item in flexibility.spec_items:
        if not 0 <= item < instance.N:
            out.add("flexibility.spec_items", f"unknown item {item}")


def _check_values(instance: Instance, out: _Collector) -> None:
    for name in INTEGER_FIELDS:
        values = getattr(instance, name)
        if values.size and not np.issubdtype(values.dtype, np.integer):
            out.each(name, values != np.round(values), "must be an integer")
    for name in FLAG_FIELDS:
        values = getattr(instance, name)
        out.each(name, (values != 0) & (values != 1), "must be 0 or 1")
    for name in ("warm_state.running", "warm_state.days_off"):
        values = getattr(instance.warm_state, name.split(".")[1])
        out.each(name, (values != 0) & (values != 1), "must be 0 or 1")
    out.each(
        "calendar.days_off",
        (instance.calendar.days_off != 0) & (instance.calendar.days_off != 1),
        "must be 0 or 1",
    )

    for name in (
        "demand",
        "initial_backorder",
        "initial_inventory",
        "inventory_min",
        "inventory_max",
        "molds",
        "rate",
        "weight_target",
        "tol_up_period",
        "tol_low_period",
        "tol_up_macro",
        "tol_low_macro",
        "unit_weight",
        "workshop_cap",
        "unit_time",
        "drum_count",
        "drum_yield",
        "enforced_molds",
        "class_weights",
    ):
        out.each(name, getattr(instance, name) < 0, "must be >= 0")
    out.each("warm_state.molds", instance.warm_state.molds < 0, "must be >= 0")

    out.each(
        "inventory_min",
        instance.inventory_min > instance.inventory_max,
        "minimum inventory exceeds maximum inventory",
    )


def _check_sets(instance: Instance, out: _Collector) -> None:
    if instance.N < instance.A:
        out.add("sets.items", f"{instance.N} items cannot cover {instance.A} tires")
    if instance.gamma < 1:
        out.add("sets.classes", "need at least one demand class")
    out.each(
        "item_tire",
        (instance.item_tire < 0) | (instance.item_tire >= instance.A),
        "unknown tire",
    )
    out.each(
        "item_workshop",
        (instance.item_workshop < 0) | (instance.item_workshop >= instance.W),
        "unknown workshop",
    )
    covered = np.bincount(
        instance.item_tire[(instance.item_tire >= 0) & (instance.item_tire < instance.A)],
        minlength=instance.A,
    )
    out.each("sets.tires", covered == 0, "tire has no item")


def _check_enforcement(instance: Instance, out: _Collector) -> None:
    eligible = instance.item_eligibility()
    for i, p, t in _where(instance.enforced == 1):
        path = _path("enforcement.production", (i, p, t))
        if eligible[i, p] != 1:
            out.add(path, f"press {p} is not eligible for tire {instance.item_tire[i]}")
        if instance.maintenance[p, t] != 1:
            out.add(path, f"press {p} is under maintenance in period {t}")


def validate(instance: Instance) -> list[ValidationError]:
    out = _Collector()
    if not _check_calendar(instance, out):
        return out.errors
    if not _check_shapes(instance, out):
        return out.errors
    _check_flexibility(instance, out)
    _check_values(instance, out)
    _check_sets(instance, out)
    if not out.errors:
        _check_enforcement(instance, out)
    return out.errors


def ensure_valid(instance: Instance) -> Instance:
    if errors := validate(instance):
        raise InstanceError(errors)
    return instance
