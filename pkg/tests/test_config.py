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

import pytest

from config import (
    DEFAULT_PROFILE,
    PROFILE_ENV_VAR,
    FactorLevels,
    LevelsLoader,
    ObjectiveWeights,
    ProfileLoader,
    RunConfig,
    RunConfigLoader,
    ScenarioLoader,
    SolverConfig,
    WeightsLoader,
    get_profile_path,
)
from util import CustomException


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_calibrated_weights():
    weights = ObjectiveWeights.calibrated()
    assert weights.classes == (20.0, 16.0, 12.0)
    assert weights.overstock == 48.0
    assert weights.understock == 4.0
    assert ObjectiveWeights.calibrated(2).classes == (20.0, 12.0)


@pytest.mark.parametrize(
    "classes, overstock, understock",
    [((), 1.0, 1.0), ((1.0, -1.0), 1.0, 1.0), ((0.0, 0.0), 0.0, 0.0)],
)
def test_invalid_weights(classes, overstock, understock):
    with pytest.raises(CustomException):
        ObjectiveWeights(classes, overstock, understock)


def test_factor_levels_map_rows_to_weights():
    levels = FactorLevels()
    weights = levels.weights_for((1, 4, 4, 4, 4))
    assert weights == ObjectiveWeights((20.0, 16.0, 12.0), 48.0, 4.0)


def test_factor_levels_need_four_distinct_values():
    levels = dict(FactorLevels().levels)
    levels["OS"] = (1.0, 1.0, 2.0, 3.0)
    with pytest.raises(CustomException):
        FactorLevels(levels)


def test_run_config_validation():
    with pytest.raises(CustomException):
        RunConfig(pool_size=0)
    with pytest.raises(CustomException):
        RunConfig(frozen_macros=1)
    with pytest.raises(CustomException):
        SolverConfig(emphasis="fast")


def test_run_config_hands_limits_to_solvers():
    config = RunConfig(lssp_time_limit=10.0, assp_time_limit=20.0, gap=0.01)
    assert config.lssp_solver().time_limit == 10.0
    assert config.assp_solver().time_limit == 20.0
    assert config.assp_solver().gap == 0.01


def test_profile_path_env_override(monkeypatch):
    monkeypatch.setenv(PROFILE_ENV_VAR, "/tmp/solvers.yml")
    assert get_profile_path() == "/tmp/solvers.yml"


def test_missing_profile_file_gives_builtins(tmp_path):
    profiles = ProfileLoader(str(tmp_path / "absent.yml")).get_profiles()
    assert set(profiles) == {"highspy", "highs", "cbc"}
    assert ProfileLoader(None).get_profile().name == DEFAULT_PROFILE


def test_profile_file_adds_command_profile(tmp_path):
    path = write(
        tmp_path,
        "solvers.yml",
        "profiles:\n"
        "  scip:\n"
        "    kind: command\n"
        "    command: 'scip -f {model_path} -l {solution_path}'\n"
        "    parser: highs\n"
        "    format: lp\n",
    )
    profile = ProfileLoader(path).get_profile("scip")
    assert profile.kind == "command"
    assert profile.file_format == "lp"
    assert profile.parser == "highs"


def test_profile_without_solution_placeholder_is_rejected(tmp_path):
    path = write(
        tmp_path,
        "solvers.yml",
        "profiles:\n  broken:\n    command: 'cbc {model_path}'\n    parser: cbc\n",
    )
    result = ProfileLoader(path).get_profiles()
    assert isinstance(result, str)
    assert "{solution_path}" in result


def test_unknown_profile_name():
    assert isinstance(ProfileLoader(None).get_profile("gurobi"), str)


def test_run_config_file(tmp_path):
    path = write(
        tmp_path,
        "run.yml",
        "lssp_time_limit: 30\n"
        "pool_size: 3\n"
        "solver: cbc\n"
        "workers: 2\n"
        "weights:\n  classes: [5, 3]\n  overstock: 2\n  understock: 1\n",
    )
    config = RunConfigLoader(path).get_run_config()
    assert isinstance(config, RunConfig)
    assert config.lssp_time_limit == 30.0
    assert config.assp_time_limit == 3600.0
    assert config.pool_size == 3
    assert config.profile.name == "cbc"
    assert config.workers == 2
    assert config.weights == ObjectiveWeights((5.0, 3.0), 2.0, 1.0)


@pytest.mark.parametrize(
    "text",
    ["pool_size: 0\n", "emphasis: fastest\n", "solver: gurobi\n", "compact: 1\n", "- a\n"],
)
def test_run_config_file_errors(tmp_path, text):
    result = RunConfigLoader(write(tmp_path, "run.yml", text)).get_run_config()
    assert isinstance(result, str)
    assert result.startswith("Error")


def test_missing_run_config_file(tmp_path):
    result = RunConfigLoader(str(tmp_path / "absent.yml")).get_run_config()
    assert result.startswith("Error: Could not access run config")


def test_weights_file(tmp_path):
    path = write(tmp_path, "w.yml", "classes: [20, 16, 12]\noverstock: 48\nunderstock: 4\n")
    assert WeightsLoader(path).get_weights() == ObjectiveWeights.calibrated()


def test_levels_file(tmp_path):
    path = write(
        tmp_path,
        "levels.yml",
        "levels:\n"
        "  BC1: [1, 2, 3, 4]\n"
        "  OS: [1, 2, 3, 4]\n"
        "  BC2: [1, 2, 3, 4]\n"
        "  BC3: [1, 2, 3, 4]\n"
        "  US: [5, 6, 7, 8]\n",
    )
    levels = LevelsLoader(path).get_levels()
    assert levels.weights_for((4, 1, 2, 3, 4)) == ObjectiveWeights((4.0, 2.0, 3.0), 1.0, 8.0)


def test_levels_file_with_missing_factor(tmp_path):
    path = write(tmp_path, "levels.yml", "levels:\n  BC1: [1, 2, 3, 4]\n")
    assert isinstance(LevelsLoader(path).get_levels(), str)


def test_scenario_file(tmp_path):
    path = write(
        tmp_path,
        "scenarios.yml",
        "scenarios:\n"
        "  - name: S0\n"
        "  - name: S1\n"
        "    items: [0, 2]\n"
        "    presses: [1]\n",
    )
    specs, inventories = ScenarioLoader(path).get_scenarios()
    assert [spec.name for spec in specs] == ["S0", "S1"]
    assert specs[0].presses is None
    assert specs[1].items == (0, 2)
    assert specs[1].presses == (1,)
    assert [(c.name, c.multiplier) for c in inventories] == [
        ("low", 0.25),
        ("medium", 1.0),
        ("high", 2.0),
    ]


def test_scenario_file_rejects_duplicates_and_bad_indices(tmp_path):
    twice = write(tmp_path, "a.yml", "scenarios:\n  - name: S0\n  - name: S0\n")
    negative = write(tmp_path, "b.yml", "scenarios:\n  - name: S0\n    items: [-1]\n")
    assert "defined twice" in ScenarioLoader(twice).get_scenarios()
    assert isinstance(ScenarioLoader(negative).get_scenarios(), str)
