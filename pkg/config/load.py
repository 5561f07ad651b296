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

from dataclasses import dataclass, field
from os import path

import yaml

from util import CustomException

from .classes import (
    FactorLevels,
    InventoryConfig,
    ObjectiveWeights,
    RunConfig,
    ScenarioSpec,
    SolverProfile,
)
from .const import (
    DEFAULT_INVENTORY_CONFIGS,
    DEFAULT_PROFILE,
    EMPHASIS_HINTS,
    FACTOR_NAMES,
)
from .validate import is_index_list, is_non_negative, is_positive

BUILTIN_PROFILES = {
    "highspy": SolverProfile("highspy", "plugin"),
    "highs": SolverProfile(
        "highs",
        "command",
        "highs --model_file {model_path} --solution_file {solution_path} "
        + "--time_limit {time_limit} --options_file {options_path}",
        "mps",
        "highs",
    ),
    "cbc": SolverProfile(
        "cbc",
        "command",
        "cbc {model_path} sec {time_limit} ratio {gap} threads {threads} "
        + "solve solu {solution_path}",
        "mps",
        "cbc",
    ),
}

PLUGIN_NAMES = ("highspy",)
PARSER_NAMES = ("cbc", "highs")
FILE_FORMATS = ("mps", "lp")


def _read_yaml(file_path: str):
    with open(file_path, "r", encoding="utf-8") as config_reader:
        content = yaml.safe_load(config_reader)
    if content is None:
        return {}
    if not isinstance(content, dict):
        raise CustomException("top level must be a mapping")
    return content


def _weights_from(entry) -> ObjectiveWeights:
    if not isinstance(entry, dict):
        raise CustomException("invalid 'weights' entry: must be a mapping")
    classes = entry.get("classes")
    if not isinstance(classes, list) or not all(
        is_non_negative(value) for value in classes
    ):
        raise CustomException(
            f"invalid 'classes' weights: '{classes}' must be a list of numbers >= 0"
        )
    for key in ("overstock", "understock"):
        if not is_non_negative(entry.get(key)):
            raise CustomException(f"invalid '{key}' weight: '{entry.get(key)}'")
    return ObjectiveWeights(
        tuple(classes), float(entry["overstock"]), float(entry["understock"])
    )


@dataclass
class ProfileLoader:
    profile_path: str | None = None

    def __post_init__(self) -> None:
        self.profiles = dict(BUILTIN_PROFILES)

    def get_profiles(self) -> dict | str:
        if self.profile_path is None or not path.exists(self.profile_path):
            return dict(self.profiles)
        try:
            entries = _read_yaml(self.profile_path).get("profiles", {})
            return self.__interpret_profiles(entries)
        except (PermissionError, IOError) as error:
            return f"Error: Could not access solver profiles at {self.profile_path}. Reason: {error}"
        except (yaml.YAMLError, CustomException) as error:
            return f"Error parsing solver profiles. Reason: {error}"

    def get_profile(self, name: str = DEFAULT_PROFILE) -> SolverProfile | str:
        profiles = self.get_profiles()
        if isinstance(profiles, str):
            return profiles
        if name not in profiles:
            return f"Error: unknown solver profile '{name}', known: {sorted(profiles)}"
        return profiles[name]

    def __interpret_profiles(self, entries) -> dict:
        if not isinstance(entries, dict):
            raise CustomException("invalid 'profiles' entry: must be a mapping")
        for name, entry in entries.items():
            self.profiles[name] = self.__validate_profile(name, entry)
        return dict(self.profiles)

    def __validate_profile(self, name, entry) -> SolverProfile:
        if not isinstance(entry, dict):
            raise CustomException(f"invalid profile '{name}': must be a mapping")

        kind = entry.get("kind", "command")
        if kind == "plugin":
            if name not in PLUGIN_NAMES:
                raise CustomException(
                    f"invalid profile '{name}': unknown plugin, known: {PLUGIN_NAMES}"
                )
            return SolverProfile(name, "plugin")
        if kind != "command":
            raise CustomException(f"invalid profile '{name}': unknown kind '{kind}'")

        command = entry.get("command")
        if not isinstance(command, str):
            raise CustomException(f"invalid profile '{name}': 'command' must be a string")
        for placeholder in ("{model_path}", "{solution_path}"):
            if placeholder not in command:
                raise CustomException(
                    f"invalid profile '{name}': 'command' lacks {placeholder}"
                )

        if (parser := entry.get("parser", name)) not in PARSER_NAMES:
            raise CustomException(
                f"invalid profile '{name}': unknown parser '{parser}'"
            )
        if (file_format := entry.get("format", "mps")) not in FILE_FORMATS:
            raise CustomException(
                f"invalid profile '{name}': unknown format '{file_format}'"
            )
        return SolverProfile(name, "command", command, file_format, parser)


@dataclass
class RunConfigLoader:
    config_path: str
    profiles: dict = field(default_factory=lambda: dict(BUILTIN_PROFILES))

    def get_run_config(self) -> RunConfig | str:
        try:
            return self.__interpret_config(_read_yaml(self.config_path))
        except (FileNotFoundError, PermissionError, IOError) as error:
            return f"Error: Could not access run config at {self.config_path}. Reason: {error}"
        except (yaml.YAMLError, CustomException) as error:
            return f"Error parsing run config. Reason: {error}"

    def __interpret_config(self, entries: dict) -> RunConfig:
        self.__validate_limits(entries)
        self.__validate_solver(entries)

        weights = None
        if (weight_entry := entries.get("weights")) is not None:
            weights = _weights_from(weight_entry)

        return RunConfig(
            lssp_time_limit=float(entries.get("lssp_time_limit", 1800.0)),
            assp_time_limit=float(entries.get("assp_time_limit", 3600.0)),
            pool_size=entries.get("pool_size", 5),
            threshold=float(entries.get("threshold", 0.0)),
            relative_tolerance=float(entries.get("relative_tolerance", 0.0)),
            emphasis=entries.get("emphasis", "balanced"),
            profile=self.profiles[entries.get("solver", DEFAULT_PROFILE)],
            gap=float(entries.get("gap", 1e-4)),
            threads=entries.get("threads", 1),
            workers=entries.get("workers", 1),
            compact=entries.get("compact", True),
            weights=weights,
        )

    def __validate_limits(self, entries: dict) -> None:
        for key in ("lssp_time_limit", "assp_time_limit"):
            if key in entries and not is_positive(entries[key]):
                raise CustomException(f"invalid '{key}': {entries[key]}")
        for key in ("pool_size", "threads", "workers"):
            value = entries.get(key, 1)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise CustomException(f"invalid '{key}': {value}")
        for key in ("threshold", "relative_tolerance", "gap"):
            if key in entries and not is_non_negative(entries[key]):
                raise CustomException(f"invalid '{key}': {entries[key]}")
        if not isinstance(entries.get("compact", True), bool):
            raise CustomException("invalid 'compact' value, should be boolean")

    def __validate_solver(self, entries: dict) -> None:
        if (emphasis := entries.get("emphasis", "balanced")) not in EMPHASIS_HINTS:
            raise CustomException(
                f"invalid 'emphasis': '{emphasis}', expected one of {EMPHASIS_HINTS}"
            )
        if (solver := entries.get("solver", DEFAULT_PROFILE)) not in self.profiles:
            raise CustomException(f"invalid 'solver': unknown profile '{solver}'")


@dataclass
class WeightsLoader:
    weights_path: str

    def get_weights(self) -> ObjectiveWeights | str:
        try:
            return _weights_from(_read_yaml(self.weights_path))
        except (FileNotFoundError, PermissionError, IOError) as error:
            return f"Error: Could not access weights file at {self.weights_path}. Reason: {error}"
        except (yaml.YAMLError, CustomException) as error:
            return f"Error parsing weights file. Reason: {error}"


@dataclass
class LevelsLoader:
    levels_path: str

    def get_levels(self) -> FactorLevels | str:
        try:
            entries = _read_yaml(self.levels_path).get("levels", {})
            return FactorLevels(self.__interpret_levels(entries))
        except (FileNotFoundError, PermissionError, IOError) as error:
            return f"Error: Could not access levels file at {self.levels_path}. Reason: {error}"
        except (yaml.YAMLError, CustomException) as error:
            return f"Error parsing levels file. Reason: {error}"

    def __interpret_levels(self, entries) -> dict:
        if not isinstance(entries, dict):
            raise CustomException("invalid 'levels' entry: must be a mapping")
        levels = {}
        for name in FACTOR_NAMES:
            values = entries.get(name)
            if not isinstance(values, list) or not all(
                is_non_negative(value) for value in values
            ):
                raise CustomException(
                    f"invalid levels for '{name}': '{values}' must be a list of numbers"
                )
            levels[name] = tuple(float(value) for value in values)
        return levels


@dataclass
class ScenarioLoader:
    scenario_path: str

    def get_scenarios(
        self,
    ) -> tuple[list[ScenarioSpec], list[InventoryConfig]] | str:
        try:
            entries = _read_yaml(self.scenario_path)
            return (
                self.__interpret_scenarios(entries.get("scenarios")),
                self.__interpret_inventory(entries.get("inventory_configs")),
            )
        except (FileNotFoundError, PermissionError, IOError) as error:
            return f"Error: Could not access scenario file at {self.scenario_path}. Reason: {error}"
        except (yaml.YAMLError, CustomException) as error:
            return f"Error parsing scenario file. Reason: {error}"

    def __interpret_scenarios(self, entries) -> list[ScenarioSpec]:
        if not isinstance(entries, list) or len(entries) == 0:
            raise CustomException("invalid 'scenarios' entry: needs a non-empty list")

        specs = []
        names = set()
        for entry in entries:
            if not isinstance(entry, dict) or not isinstance(
                name := entry.get("name"), str
            ):
                raise CustomException("invalid scenario: each needs a 'name'")
            if name in names:
                raise CustomException(f"invalid scenario '{name}': defined twice")
            names.add(name)

            items = entry.get("items", [])
            if not is_index_list(items):
                raise CustomException(
                    f"invalid scenario '{name}': 'items' must be a list of indices"
                )
            presses = entry.get("presses")
            if presses is not None and not is_index_list(presses):
                raise CustomException(
                    f"invalid scenario '{name}': 'presses' must be a list of indices"
                )
            specs.append(
                ScenarioSpec(
                    name,
                    tuple(items),
                    None if presses is None else tuple(presses),
                )
            )
        return specs

    def __interpret_inventory(self, entries) -> list[InventoryConfig]:
        if entries is None:
            return [InventoryConfig(name, mult) for name, mult in DEFAULT_INVENTORY_CONFIGS]
        if not isinstance(entries, list) or len(entries) == 0:
            raise CustomException(
                "invalid 'inventory_configs' entry: needs a non-empty list"
            )

        configs = []
        for entry in entries:
            if not isinstance(entry, dict) or not isinstance(entry.get("name"), str):
                raise CustomException("invalid inventory config: each needs a 'name'")
            if not is_non_negative(multiplier := entry.get("multiplier")):
                raise CustomException(
                    f"invalid inventory config '{entry['name']}': "
                    + f"multiplier '{multiplier}' must be a number >= 0"
                )
            configs.append(InventoryConfig(entry["name"], float(multiplier)))
        return configs
