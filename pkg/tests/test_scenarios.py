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

import numpy as np
import pandas as pd
import pytest

from config import InventoryConfig, RunConfig, ScenarioSpec
from evaluator import KpiReport
from scenarios import (
    add_gaps,
    kpi_table,
    press_counts,
    restrict_eligibility,
    run_sensitivity,
    scale_inventory,
)
from util import CustomException, RestrictionError

from builders import dense_instance, tiny_instance

INVENTORIES = [InventoryConfig("low", 0.5), InventoryConfig("high", 2.0)]

# scenario, configuration, BC1, OS, BT, US
PLANT_RESULTS = [
    ("S0", "conf1", 2563, 0, 43103, 51849),
    ("S0", "conf2", 226, 543, 6298, 30676),
    ("S0", "conf3", 294, 902, 3758, 6215),
    ("S1", "conf1", 5209, 16456, 52607, 61980),
    ("S1", "conf2", 840, 1561, 7516, 34145),
    ("S1", "conf3", 912, 5618, 6779, 11016),
    ("S2", "conf1", 3681, 967, 45611, 54933),
    ("S2", "conf2", 486, 1286, 7065, 32214),
    ("S2", "conf3", 793, 3291, 5559, 8910),
    ("S3", "conf1", 3787, 866, 45999, 54933),
    ("S3", "conf2", 347, 567, 6647, 31768),
    ("S3", "conf3", 785, 2999, 5067, 8095),
    ("S4", "conf1", 2272, 36, 43282, 51341),
    ("S4", "conf2", 323, 653, 6214, 29490),
    ("S4", "conf3", 271, 1149, 3482, 6070),
    ("S5", "conf1", 2312, 16, 42335, 50954),
    ("S5", "conf2", 210, 528, 6145, 29179),
    ("S5", "conf3", 275, 1026, 3992, 6540),
]


def eligibility_run(instance):
    return KpiReport(
        (float(instance.eligibility.sum()), 0.0),
        float(instance.initial_inventory.sum()),
        0.0,
        1.0,
    )


def plant_frame():
    records = [
        dict(zip(("scenario", "configuration", "BC1", "OS", "BT", "US"), row), status="ok")
        for row in PLANT_RESULTS
    ]
    return add_gaps(pd.DataFrame(records))


def test_unrestricted_scenario_keeps_the_instance(instance):
    assert restrict_eligibility(instance, (0, 1), None) is instance


def test_restriction_only_touches_the_listed_items(instance):
    restricted = restrict_eligibility(instance, (1,), (0,))
    assert restricted.eligibility.tolist() == [[1, 0], [1, 0]]
    assert instance.eligibility.tolist() == [[1, 0], [1, 1]]


@pytest.mark.parametrize(
    "items, presses",
    [((2,), (0,)), ((-1,), (0,)), ((0,), (2,)), ((0,), (1,)), ((0,), ())],
)
def test_bad_restrictions_raise(instance, items, presses):
    with pytest.raises(RestrictionError):
        restrict_eligibility(instance, items, presses)


def test_scale_inventory_rounds():
    instance = tiny_instance(initial_inventory=np.array([4, 5]))
    assert scale_inventory(instance, 0.25).initial_inventory.tolist() == [1, 1]
    assert scale_inventory(instance, 2.0).initial_inventory.tolist() == [8, 10]
    assert scale_inventory(instance, 0.0).initial_inventory.tolist() == [0, 0]
    with pytest.raises(RestrictionError):
        scale_inventory(instance, -1.0)


def test_press_counts(instance):
    assert press_counts(instance, (0, 1)) == {0: 1, 1: 2}
    assert press_counts(restrict_eligibility(instance, (1,), (1,)), (1,)) == {1: 1}


# presses left to the studied range in scenarios S1 to S5 of the plant study
@pytest.mark.parametrize("presses", [13, 18, 20, 22, 24])
def test_plant_scenarios_restrict_the_press_count(presses):
    plant = dense_instance(3, 30, 1, 1)
    assert press_counts(plant, (0, 1)) == {0: 30, 1: 30}
    restricted = restrict_eligibility(plant, (0, 1), range(presses))
    assert press_counts(restricted, (0, 1, 2)) == {0: presses, 1: presses, 2: 30}


def test_sensitivity_compares_with_reference_per_configuration():
    base = tiny_instance(initial_inventory=np.array([4, 4]))
    specs = [ScenarioSpec("S0"), ScenarioSpec("S1", (1,), (0,))]
    frame = run_sensitivity(base, specs, INVENTORIES, RunConfig(), run_fn=eligibility_run)

    assert frame[["scenario", "configuration"]].values.tolist() == [
        ["S0", "low"],
        ["S0", "high"],
        ["S1", "low"],
        ["S1", "high"],
    ]
    assert (frame.status == "ok").all()
    assert frame.OS.tolist() == [4.0, 16.0, 4.0, 16.0]
    s1 = frame[frame.scenario == "S1"]
    assert s1.BC1.tolist() == [2.0, 2.0]
    assert s1.gap_BC1.tolist() == pytest.approx([-100 / 3, -100 / 3])
    assert s1.gap_OS.tolist() == [0.0, 0.0]
    assert s1.gap_US.tolist() == ["NA", "NA"]


def test_failed_scenario_is_recorded():
    specs = [ScenarioSpec("S0"), ScenarioSpec("S2", (0,), (1,))]
    frame = run_sensitivity(
        tiny_instance(), specs, INVENTORIES[:1], RunConfig(), run_fn=eligibility_run
    )
    failed = frame[frame.scenario == "S2"].iloc[0]
    assert failed.status == "failed"
    assert "without an eligible press" in failed.error
    assert failed.gap_BC1 is None


def test_failing_run_is_recorded():
    def broken(instance):
        raise CustomException("solver failed")

    frame = run_sensitivity(
        tiny_instance(), [ScenarioSpec("S0")], INVENTORIES, RunConfig(), run_fn=broken
    )
    assert frame.status.tolist() == ["failed", "failed"]
    assert frame.error.tolist() == ["solver failed", "solver failed"]


def test_sensitivity_needs_the_reference():
    with pytest.raises(CustomException):
        run_sensitivity(
            tiny_instance(), [ScenarioSpec("S1", (1,), (0,))], INVENTORIES, RunConfig(),
            run_fn=eligibility_run,
        )


def test_sensitivity_workers_agree():
    base = tiny_instance(initial_inventory=np.array([4, 4]))
    specs = [ScenarioSpec("S0"), ScenarioSpec("S1", (1,), (0,))]
    serial = run_sensitivity(base, specs, INVENTORIES, RunConfig(), run_fn=eligibility_run)
    threaded = run_sensitivity(
        base, specs, INVENTORIES, RunConfig(workers=2), run_fn=eligibility_run
    )
    pd.testing.assert_frame_equal(serial, threaded)


@pytest.mark.parametrize(
    "scenario, kpi, cells",
    [
        ("S1", "BC1", ["5209 (103%)", "840 (272%)", "912 (210%)"]),
        ("S1", "OS", ["16456 (NA)", "1561 (187%)", "5618 (523%)"]),
        ("S1", "BT", ["52607 (22%)", "7516 (19%)", "6779 (80%)"]),
        # (61980 - 51849) / 51849 is 19.5%
        ("S1", "US", ["61980 (20%)", "34145 (11%)", "11016 (77%)"]),
        ("S2", "BC1", ["3681 (44%)", "486 (115%)", "793 (170%)"]),
        ("S2", "OS", ["967 (NA)", "1286 (137%)", "3291 (265%)"]),
        ("S2", "BT", ["45611 (6%)", "7065 (12%)", "5559 (48%)"]),
        ("S2", "US", ["54933 (6%)", "32214 (5%)", "8910 (43%)"]),
        ("S3", "BC1", ["3787 (48%)", "347 (54%)", "785 (167%)"]),
        ("S3", "OS", ["866 (NA)", "567 (4%)", "2999 (232%)"]),
        ("S3", "BT", ["45999 (7%)", "6647 (6%)", "5067 (35%)"]),
        ("S3", "US", ["54933 (6%)", "31768 (4%)", "8095 (30%)"]),
        ("S4", "BC1", ["2272 (-11%)", "323 (43%)", "271 (-8%)"]),
        ("S4", "OS", ["36 (NA)", "653 (20%)", "1149 (27%)"]),
        ("S4", "BT", ["43282 (0%)", "6214 (-1%)", "3482 (-7%)"]),
        ("S4", "US", ["51341 (-1%)", "29490 (-4%)", "6070 (-2%)"]),
        ("S5", "BC1", ["2312 (-10%)", "210 (-7%)", "275 (-6%)"]),
        ("S5", "OS", ["16 (NA)", "528 (-3%)", "1026 (14%)"]),
        ("S5", "BT", ["42335 (-2%)", "6145 (-2%)", "3992 (6%)"]),
        ("S5", "US", ["50954 (-2%)", "29179 (-5%)", "6540 (5%)"]),
    ],
)
def test_kpi_table_cells(scenario, kpi, cells):
    table = kpi_table(plant_frame(), kpi)
    assert table.loc[scenario].tolist() == cells


def test_kpi_table_reference_row_has_values_only():
    table = kpi_table(plant_frame(), "BC1")
    assert table.loc["S0"].tolist() == ["2563", "226", "294"]


def test_kpi_table_marks_failures():
    frame = plant_frame()
    frame.loc[4, "status"] = "failed"
    table = kpi_table(add_gaps(frame), "BC1")
    assert table.loc["S1", "conf2"] == "failed"
