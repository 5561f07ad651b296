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
from dataclasses import dataclass

import numpy as np

from config import SCHEMA_VERSION
from util import InstanceError

from .classes import Calendar, FlexibilityParams, Instance, WarmState
from .validate import ValidationError, validate

# (section, key) -> (instance field, kind); kinds fix the serialized number type
LAYOUT = (
    ("sets", "item_tire", "item_tire", "int"),
    ("sets", "item_workshop", "item_workshop", "int"),
    ("demand", "demand", "demand", "int"),
    ("demand", "initial_backorder", "initial_backorder", "int"),
    ("demand", "class_weights", "class_weights", "float"),
    ("inventory", "initial", "initial_inventory", "int"),
    ("inventory", "min", "inventory_min", "int"),
    ("inventory", "max", "inventory_max", "int"),
    ("capacity", "molds", "molds", "int"),
    ("capacity", "eligibility", "eligibility", "int"),
    ("capacity", "rate", "rate", "int"),
    ("capacity", "maintenance", "maintenance", "int"),
    ("weights", "target", "weight_target", "float"),
    ("weights", "upper_period", "tol_up_period", "float"),
    ("weights", "lower_period", "tol_low_period", "float"),
    ("weights", "upper_macro", "tol_up_macro", "float"),
    ("weights", "lower_macro", "tol_low_macro", "float"),
    ("weights", "unit_weight", "unit_weight", "float"),
    ("upstream", "workshop_capacity", "workshop_cap", "float"),
    ("upstream", "unit_time", "unit_time", "float"),
    ("upstream", "drum_count", "drum_count", "int"),
    ("upstream", "drum_yield", "drum_yield", "float"),
    ("enforcement", "molds", "enforced_molds", "int"),
)

FLEXIBILITY_KEYS = (
    "simultaneous_items",
    "setups_per_period",
    "setups_per_macro",
    "endings_per_macro",
    "min_run",
    "setup_window",
    "ending_window",
    "min_molds",
)


def _dense(array: np.ndarray, kind: str) -> list:
    if kind == "int":
        return np.asarray(array).astype(np.int64).tolist()
    return np.asarray(array).astype(np.float64).tolist()


def _array(value, kind: str, path: str) -> np.ndarray:
    try:
        array = np.array(value, dtype=np.float64)
    except (TypeError, ValueError) as error:
        raise InstanceError([ValidationError(path, f"not a dense numeric array ({error})")]) from error
    if kind == "int":
        fractional = array != np.round(array)
        if fractional.any():
            index = tuple(int(k) for k in np.argwhere(fractional)[0])
            raise InstanceError(
                [ValidationError(path + "".join(f"[{k}]" for k in index), "must be an integer")]
            )
        return array.astype(np.int64)
    return array


def instance_to_dict(instance: Instance) -> dict:
    document = {
        "meta": {"schema_version": SCHEMA_VERSION, "name": instance.name},
        "sets": {
            "tires": instance.A,
            "items": instance.N,
            "presses": instance.P,
            "workshops": instance.W,
            "drums": instance.N_d,
            "classes": instance.gamma,
        },
        "demand": {},
        "inventory": {},
        "capacity": {},
        "weights": {},
        "upstream": {},
        "flexibility": {},
        "calendar": {},
        "enforcement": {},
        "warm_state": {},
    }
    for section, key, name, kind in LAYOUT:
        document[section][key] = _dense(getattr(instance, name), kind)

    flexibility = instance.flexibility
    for key in FLEXIBILITY_KEYS:
        document["flexibility"][key] = int(getattr(flexibility, key))
    document["flexibility"]["spec_items"] = [int(i) for i in flexibility.spec_items]

    document["calendar"] = {
        "periods_per_macro": int(instance.calendar.periods_per_macro),
        "days_off": _dense(instance.calendar.days_off, "int"),
    }
    document["enforcement"]["production"] = [
        [int(k) for k in index] for index in np.argwhere(instance.enforced == 1)
    ]
    warm = instance.warm_state
    document["warm_state"] = {
        "running": _dense(warm.running, "int"),
        "molds": _dense(warm.molds, "int"),
        "days_off": _dense(warm.days_off, "int"),
    }
    return document


def _section(document: dict, name: str) -> dict:
    if not isinstance(section := document.get(name), dict):
        raise InstanceError([ValidationError(name, "missing section")])
    return section


def _entry(section: dict, section_name: str, key: str):
    if key not in section:
        raise InstanceError([ValidationError(f"{section_name}.{key}", "missing entry")])
    return section[key]


def instance_from_dict(document: dict) -> Instance:
    if not isinstance(document, dict):
        raise InstanceError([ValidationError("", "instance must be a JSON object")])
    meta = _section(document, "meta")
    if not isinstance(meta.get("schema_version"), str):
        raise InstanceError([ValidationError("meta.schema_version", "missing schema version")])
    if meta["schema_version"] != SCHEMA_VERSION:
        raise InstanceError(
            [
                ValidationError(
                    "meta.schema_version",
                    f"unsupported version '{meta['schema_version']}', expected '{SCHEMA_VERSION}'",
                )
            ]
        )

    values = {}
    for section_name, key, name, kind in LAYOUT:
        section = _section(document, section_name)
        values[name] = _array(
            _entry(section, section_name, key), kind, f"{section_name}.{key}"
        )

    sets = _section(document, "sets")
    presses = int(_entry(sets, "sets", "presses"))
    flexibility_entry = _section(document, "flexibility")
    flexibility = FlexibilityParams(
        *(int(_entry(flexibility_entry, "flexibility", key)) for key in FLEXIBILITY_KEYS),
        spec_items=tuple(flexibility_entry.get("spec_items", [])),
    )
    calendar_entry = _section(document, "calendar")
    calendar = Calendar(
        int(_entry(calendar_entry, "calendar", "periods_per_macro")),
        _array(_entry(calendar_entry, "calendar", "days_off"), "int", "calendar.days_off"),
    )

    items = values["item_tire"].shape[0]
    enforced = np.zeros((items, presses, calendar.T), dtype=np.int64)
    production = _entry(_section(document, "enforcement"), "enforcement", "production")
    for index, triple in enumerate(production):
        path = f"enforcement.production[{index}]"
        if not isinstance(triple, list) or len(triple) != 3:
            raise InstanceError([ValidationError(path, "must be [item, press, period]")])
        i, p, t = (int(k) for k in triple)
        if not (0 <= i < items and 0 <= p < presses and 0 <= t < calendar.T):
            raise InstanceError([ValidationError(path, f"index {triple} out of range")])
        enforced[i, p, t] = 1

    warm_entry = _section(document, "warm_state")
    warm = WarmState(
        _array(_entry(warm_entry, "warm_state", "running"), "int", "warm_state.running"),
        _array(_entry(warm_entry, "warm_state", "molds"), "int", "warm_state.molds"),
        _array(_entry(warm_entry, "warm_state", "days_off"), "int", "warm_state.days_off"),
    )

    return Instance(
        **values,
        enforced=enforced,
        flexibility=flexibility,
        calendar=calendar,
        warm_state=warm,
        name=str(meta.get("name", "instance")),
    )


def dumps_instance(instance: Instance) -> str:
    return json.dumps(instance_to_dict(instance), separators=(",", ":")) + "\n"


def loads_instance(text: str) -> Instance:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as error:
        raise InstanceError([ValidationError("", f"invalid JSON: {error}")]) from error
    instance = instance_from_dict(document)
    if errors := validate(instance):
        raise InstanceError(errors)
    return instance


def write_instance(instance: Instance, path: str) -> None:
    with open(path, "w", encoding="utf-8") as writer:
        writer.write(dumps_instance(instance))


@dataclass
class InstanceLoader:
    instance_path: str

    def get_instance(self) -> Instance | str:
        try:
            with open(self.instance_path, "r", encoding="utf-8") as reader:
                return loads_instance(reader.read())
        except (FileNotFoundError, PermissionError, IOError) as error:
            return f"Error: Could not access instance file at {self.instance_path}. Reason: {error}"
        except InstanceError as error:
            return f"Error parsing instance file. Reason: {error}"
