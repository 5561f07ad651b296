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

import pandas as pd
import pytest

from config import PROFILE_ENV_VAR
from evaluator import KpiReport, write_kpis, write_plan
from instance import InstanceLoader, write_instance

import VulcanPlan
from builders import running_plan, tiny_instance, tiny_plan
from readers import read_mps


@pytest.fixture
def files(tmp_path, monkeypatch):
    monkeypatch.setenv(PROFILE_ENV_VAR, str(tmp_path / "no-profiles.yml"))
    instance = tiny_instance()
    write_instance(instance, str(tmp_path / "tiny.json"))
    write_plan(tiny_plan(instance), str(tmp_path / "plan.json"), "tiny")
    return tmp_path


def run(*argv) -> int:
    return VulcanPlan.main(["-q", *argv])


def test_generate(tmp_path):
    out = tmp_path / "week.json"
    assert run("generate", "--seed", "3", "--scale", "tiny", "--out", str(out)) == 0
    instance = InstanceLoader(str(out)).get_instance()
    assert not isinstance(instance, str)


def test_validate_feasible_plan(files):
    out = files / "violations.csv"
    code = run(
        "validate", "--instance", str(files / "tiny.json"), "--plan", str(files / "plan.json"),
        "--out", str(out),
    )
    assert code == 0
    assert out.exists()


def test_validate_reports_violations(files):
    bad = running_plan(tiny_instance(), [(0, 0, 0), (1, 0, 0)])
    write_plan(bad, str(files / "bad.json"), "tiny")
    out = files / "violations.csv"
    code = run(
        "validate", "--instance", str(files / "tiny.json"), "--plan", str(files / "bad.json"),
        "--out", str(out),
    )
    assert code == 1
    assert "eq12" in pd.read_csv(out).tag.tolist()


def test_unreadable_instance_exits_with_parse_code(files):
    code = run(
        "validate", "--instance", str(files / "missing.json"), "--plan", str(files / "plan.json")
    )
    assert code == 2


def test_kpi(files):
    out = files / "kpi.csv"
    code = run(
        "kpi", "--instance", str(files / "tiny.json"), "--plan", str(files / "plan.json"),
        "--name", "week-1", "--out", str(out),
    )
    assert code == 0
    frame = pd.read_csv(out)
    assert frame["name"].tolist() == ["week-1"]
    assert frame.OF.tolist() == [0.0]


def test_compare(files):
    write_kpis(
        {"w1": KpiReport((10.0, 4.0), 2.0, 1.0, 5.0), "w2": KpiReport((20.0, 2.0), 4.0, 1.0, 8.0)},
        str(files / "company.csv"),
    )
    write_kpis(
        {"w1": KpiReport((5.0, 4.0), 1.0, 1.0, 4.0), "w2": KpiReport((10.0, 2.0), 4.0, 2.0, 6.0)},
        str(files / "plan.csv"),
    )
    out = files / "gaps.csv"
    code = run(
        "compare", "--a", str(files / "company.csv"), "--b", str(files / "plan.csv"),
        "--out", str(out),
    )
    assert code == 0
    assert "Mean" in pd.read_csv(out)["name"].tolist()


def test_compare_without_shared_rows(files):
    write_kpis({"w1": KpiReport((1.0, 1.0), 1.0, 1.0, 1.0)}, str(files / "a.csv"))
    write_kpis({"w9": KpiReport((1.0, 1.0), 1.0, 1.0, 1.0)}, str(files / "b.csv"))
    assert run("compare", "--a", str(files / "a.csv"), "--b", str(files / "b.csv")) == 2


@pytest.mark.parametrize("model", ["integrated", "lssp"])
def test_export_mps(files, model):
    out = files / f"{model}.mps"
    code = run(
        "export", "--instance", str(files / "tiny.json"), "--model", model,
        "--format", "mps", "--out", str(out),
    )
    assert code == 0
    read = read_mps(out.read_text(encoding="utf-8"))
    assert read.rows and read.binaries


@pytest.mark.parametrize("mode", ["integrated", "matheuristic"])
def test_solve(files, highs, mode):
    out = files / f"{mode}.json"
    code = run(
        "solve", "--mode", mode, "--instance", str(files / "tiny.json"),
        "--time-limits", "60", "--out", str(out),
    )
    assert code == 0
    assert (files / f"{mode}.manifest.json").exists()
    assert (files / f"{mode}.kpi.csv").exists()
    assert run(
        "validate", "--instance", str(files / "tiny.json"), "--plan", str(out),
        "--out", str(files / "check.csv"),
    ) == 0


def test_unknown_solver_profile(files):
    code = run(
        "solve", "--instance", str(files / "tiny.json"), "--solver", "gurobi",
        "--out", str(files / "plan-x.json"),
    )
    assert code == 2
