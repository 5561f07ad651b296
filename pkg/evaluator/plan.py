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

"""Decoded production plans and their file format.

A plan file stores production sparsely as [item, press, period, quantity]
rows and, optionally, running triples and the dense inventory arrays. Indices
are 0-based array positions as in the instance file.
"""

import json
from dataclasses import dataclass, replace

import numpy as np

from config import PLAN_SCHEMA_VERSION
from instance import Instance
from util import CustomException, DimensionError


def _frozen(value, dtype) -> np.ndarray:
    array = np.array(value, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class PlanSolution:
    production: np.ndarray
    running: np.ndarray
    inventory: np.ndarray
    backorder: np.ndarray
    overstock: np.ndarray | None = None
    understock: np.ndarray | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "production", _frozen(self.production, np.int64))
        object.__setattr__(self, "running", _frozen(self.running, np.int64))
        object.__setattr__(self, "inventory", _frozen(self.inventory, np.int64))
        object.__setattr__(self, "backorder", _frozen(self.backorder, np.int64))
        for name in ("overstock", "understock"):
            if (value := getattr(self, name)) is not None:
                object.__setattr__(self, name, _frozen(value, np.float64))

    @property
    def T(self) -> int:
        return int(self.production.shape[2])

    @property
    def lots(self) -> np.ndarray:
        """Production per item and period, summed over presses."""
        return self.production.sum(axis=1)

    @property
    def molds(self) -> np.ndarray:
        return self.running.sum(axis=1)

    def check_dimensions(self, instance: Instance) -> None:
        expected = {
            "production": (instance.N, instance.P, instance.T),
            "running": (instance.N, instance.P, instance.T),
            "inventory": (instance.A, instance.T),
            "backorder": (instance.A, instance.gamma, instance.T),
            "overstock": (instance.A, instance.T),
            "understock": (instance.A, instance.T),
        }
        for name, shape in expected.items():
            value = getattr(self, name)
            if value is not None and value.shape != shape:
                raise DimensionError(f"plan {name} has shape {value.shape}, expected {shape}")

    def periods(self, start: int, stop: int) -> "PlanSolution":
        def cut(value):
            return None if value is None else value[..., start:stop]

        return PlanSolution(
            cut(self.production),
            cut(self.running),
            cut(self.inventory),
            cut(self.backorder),
            cut(self.overstock),
            cut(self.understock),
        )


def fill_inventory(
    instance: Instance, production: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Inventory and backorders of a production plan by class-priority allocation.

    Each period serves the backlog of class 1 first, then class 2 and so on;
    what is left after every class is served stays in stock.
    """
    A, gamma, T = instance.A, instance.gamma, instance.T
    lots = np.asarray(production).sum(axis=1)
    inventory = np.zeros((A, T), dtype=np.int64)
    backorder = np.zeros((A, gamma, T), dtype=np.int64)
    for a in range(A):
        items = instance.tire_items(a)
        stock = int(instance.initial_inventory[a])
        pending = instance.initial_backorder[a].astype(np.int64).copy()
        for t in range(T):
            available = stock + int(lots[items, t].sum())
            for c in range(gamma):
                backlog = int(pending[c] + instance.demand[a, c, t])
                served = min(available, backlog)
                available -= served
                pending[c] = backlog - served
            backorder[a, :, t] = pending
            inventory[a, t] = available
            stock = available
    return inventory, backorder


def plan_from_production(
    instance: Instance, production: np.ndarray, running: np.ndarray | None = None
) -> PlanSolution:
    production = np.asarray(production, dtype=np.int64)
    if running is None:
        running = (production > 0).astype(np.int64)
    inventory, backorder = fill_inventory(instance, production)
    return PlanSolution(production, running, inventory, backorder)


def empty_plan(instance: Instance) -> PlanSolution:
    shape = (instance.N, instance.P, instance.T)
    return plan_from_production(instance, np.zeros(shape, dtype=np.int64))


def concatenate_plans(plans: list[PlanSolution]) -> PlanSolution:
    def join(name: str):
        values = [getattr(plan, name) for plan in plans]
        if any(value is None for value in values):
            return None
        return np.concatenate(values, axis=-1)

    return PlanSolution(
        *(join(name) for name in ("production", "running", "inventory", "backorder")),
        join("overstock"),
        join("understock"),
    )


def plan_to_dict(plan: PlanSolution, instance_name: str = "instance") -> dict:
    document = {
        "meta": {"schema_version": PLAN_SCHEMA_VERSION, "instance": instance_name},
        "production": [
            [int(i), int(p), int(t), int(plan.production[i, p, t])]
            for i, p, t in np.argwhere(plan.production != 0)
        ],
        "running": [[int(k) for k in index] for index in np.argwhere(plan.running == 1)],
        "inventory": plan.inventory.tolist(),
        "backorder": plan.backorder.tolist(),
    }
    if plan.overstock is not None:
        document["overstock"] = plan.overstock.tolist()
    if plan.understock is not None:
        document["understock"] = plan.understock.tolist()
    return document


def _sparse(rows, width: int, shape: tuple, name: str) -> np.ndarray:
    array = np.zeros(shape, dtype=np.int64)
    if not isinstance(rows, list):
        raise CustomException(f"plan entry '{name}' must be a list")
    for k, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != width:
            raise CustomException(f"{name}[{k}] must have {width} entries")
        i, p, t = (int(v) for v in row[:3])
        if not (0 <= i < shape[0] and 0 <= p < shape[1] and 0 <= t < shape[2]):
            raise CustomException(f"{name}[{k}]: index {row[:3]} out of range")
        value = row[3] if width == 4 else 1
        if value != round(value) or value < 0:
            raise CustomException(f"{name}[{k}]: quantity {value} is not a non-negative integer")
        array[i, p, t] = int(value)
    return array


def _dense(document: dict, name: str, shape: tuple, dtype) -> np.ndarray | None:
    if name not in document:
        return None
    array = np.array(document[name], dtype=np.float64)
    if array.shape != shape:
        raise CustomException(f"plan entry '{name}' has shape {array.shape}, expected {shape}")
    if dtype == np.int64 and (array != np.round(array)).any():
        raise CustomException(f"plan entry '{name}' must hold integers")
    return array.astype(dtype)


def plan_from_dict(document: dict, instance: Instance) -> PlanSolution:
    if not isinstance(document, dict):
        raise CustomException("plan must be a JSON object")
    version = document.get("meta", {}).get("schema_version")
    if version != PLAN_SCHEMA_VERSION:
        raise CustomException(
            f"unsupported plan version '{version}', expected '{PLAN_SCHEMA_VERSION}'"
        )
    shape = (instance.N, instance.P, instance.T)
    production = _sparse(document.get("production", []), 4, shape, "production")
    running = None
    if "running" in document:
        running = _sparse(document["running"], 3, shape, "running")

    inventory = _dense(document, "inventory", (instance.A, instance.T), np.int64)
    backorder = _dense(
        document, "backorder", (instance.A, instance.gamma, instance.T), np.int64
    )
    plan = plan_from_production(instance, production, running)
    if inventory is not None and backorder is not None:
        plan = replace(plan, inventory=inventory, backorder=backorder)
    elif inventory is not None or backorder is not None:
        raise CustomException("plan must give both inventory and backorder or neither")
    return replace(
        plan,
        overstock=_dense(document, "overstock", (instance.A, instance.T), np.float64),
        understock=_dense(document, "understock", (instance.A, instance.T), np.float64),
    )


def dumps_plan(plan: PlanSolution, instance_name: str = "instance") -> str:
    return json.dumps(plan_to_dict(plan, instance_name), separators=(",", ":")) + "\n"


def write_plan(plan: PlanSolution, path: str, instance_name: str = "instance") -> None:
    with open(path, "w", encoding="utf-8") as writer:
        writer.write(dumps_plan(plan, instance_name))


@dataclass
class PlanLoader:
    plan_path: str

    def get_plan(self, instance: Instance) -> PlanSolution | str:
        try:
            with open(self.plan_path, "r", encoding="utf-8") as reader:
                plan = plan_from_dict(json.loads(reader.read()), instance)
            plan.check_dimensions(instance)
            return plan
        except (FileNotFoundError, PermissionError, IOError) as error:
            return f"Error: Could not access plan file at {self.plan_path}. Reason: {error}"
        except json.JSONDecodeError as error:
            return f"Error parsing plan file. Reason: invalid JSON: {error}"
        except (CustomException, ValueError, TypeError) as error:
            return f"Error parsing plan file. Reason: {error}"
