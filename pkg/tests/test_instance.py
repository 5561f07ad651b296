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
from dataclasses import replace

import numpy as np
import pytest

from instance import (
    Calendar,
    InstanceLoader,
    SizeSpec,
    Timeline,
    WarmState,
    dumps_instance,
    ensure_valid,
    generate,
    instance_to_dict,
    loads_instance,
    roll_warm_state,
    slice_macro,
    start_flags,
    validate,
    with_initial_state,
    write_instance,
)
from util import DimensionError, InstanceError, SizeSpecError

from builders import tiny_instance, tiny_plan


def test_tiny_instance_is_valid(instance):
    assert validate(instance) == []
    assert (instance.A, instance.N, instance.P, instance.T, instance.H) == (2, 2, 2, 4, 2)
    assert instance.flexibility.depth == 2


def test_dump_and_load_keep_every_field(instance):
    text = dumps_instance(instance)
    again = loads_instance(text)
    assert dumps_instance(again) == text
    assert np.array_equal(again.demand, instance.demand)
    assert again.name == "tiny"


def test_loader_reads_written_file(tmp_path, instance):
    path = str(tmp_path / "tiny.json")
    write_instance(instance, path)
    loaded = InstanceLoader(path).get_instance()
    assert np.array_equal(loaded.eligibility, instance.eligibility)


def test_loader_reports_missing_file(tmp_path):
    result = InstanceLoader(str(tmp_path / "absent.json")).get_instance()
    assert result.startswith("Error: Could not access instance file")


def test_wrong_shape_is_reported():
    broken = tiny_instance(demand=np.zeros((2, 2, 3), dtype=np.int64))
    errors = validate(broken)
    assert [error.path for error in errors] == ["demand"]
    with pytest.raises(InstanceError):
        ensure_valid(broken)


def test_negative_value_is_reported():
    errors = validate(tiny_instance(molds=np.array([1, -1])))
    assert [str(error) for error in errors] == ["molds[1]: must be >= 0"]


def test_enforcement_on_ineligible_press():
    enforced = np.zeros((2, 2, 4), dtype=np.int64)
    enforced[0, 1, 0] = 1
    errors = validate(tiny_instance(enforced=enforced))
    assert len(errors) == 1
    assert errors[0].path == "enforcement.production[0][1][0]"
    assert "not eligible" in errors[0].message


def test_fractional_integer_entry(instance):
    document = instance_to_dict(instance)
    document["demand"]["demand"][0][0][0] = 1.5
    with pytest.raises(InstanceError) as caught:
        loads_instance(json.dumps(document))
    assert caught.value.errors[0].path == "demand.demand[0][0][0]"


def test_unsupported_schema_version(instance):
    document = instance_to_dict(instance)
    document["meta"]["schema_version"] = "0.1"
    with pytest.raises(InstanceError) as caught:
        loads_instance(json.dumps(document))
    assert caught.value.errors[0].path == "meta.schema_version"


def test_invalid_json():
    with pytest.raises(InstanceError):
        loads_instance("{not json")


def test_generation_is_deterministic():
    first = dumps_instance(generate(7, SizeSpec.tiny()))
    assert first == dumps_instance(generate(7, SizeSpec.tiny()))
    assert first != dumps_instance(generate(8, SizeSpec.tiny()))


@pytest.mark.parametrize("size", [SizeSpec.tiny(), SizeSpec.small()])
def test_generated_instances_are_valid(size):
    instance = generate(3, size)
    assert validate(instance) == []
    assert instance.eligibility.sum(axis=0).min() >= 1
    assert instance.eligibility.sum(axis=1).min() >= 1
    assert instance.eligibility.sum() == size.target_ones()


def test_small_generated_instance_survives_a_dump():
    instance = generate(11, SizeSpec.small())
    assert dumps_instance(loads_instance(dumps_instance(instance))) == dumps_instance(instance)


def test_full_scale_eligibility_statistics():
    size = SizeSpec.full_scale()
    size.check()
    assert size.target_ones() == 3360
    low, high = size.eligibility_bounds()
    assert low <= size.target_ones() <= high


@pytest.mark.parametrize(
    "changes",
    [{"density": 0.1}, {"macros": 3}, {"items": 1}, {"rate_range": (3, 2)}],
)
def test_impossible_sizes(changes):
    with pytest.raises(SizeSpecError):
        generate(1, replace(SizeSpec.tiny(), **changes))


def test_slice_macro(instance):
    week = slice_macro(instance, 1)
    assert week.T == 2
    assert week.H == 1
    assert np.array_equal(week.demand, instance.demand[..., 2:4])
    assert week.tol_up_macro.shape == (1,)
    assert validate(week) == []
    with pytest.raises(DimensionError):
        slice_macro(instance, 2)


def test_with_initial_state(instance):
    moved = with_initial_state(instance, inventory=[3, 4], backorder=[[1, 0], [0, 2]])
    assert moved.initial_inventory.tolist() == [3, 4]
    assert moved.initial_backorder.tolist() == [[1, 0], [0, 2]]
    with pytest.raises(DimensionError):
        with_initial_state(instance, inventory=[1, 2, 3])
    with pytest.raises(DimensionError):
        with_initial_state(instance, warm_state=WarmState.cold(2, 2, 5))


def test_roll_warm_state_keeps_the_last_periods(instance, plan):
    week = slice_macro(instance, 0)
    running = plan.running[..., :2]
    warm = roll_warm_state(week, running, running.sum(axis=1))
    assert warm.depth == 2
    assert np.array_equal(warm.running, running)
    assert warm.molds.tolist() == [[1, 1], [0, 1]]
    with pytest.raises(DimensionError):
        roll_warm_state(week, plan.running, plan.molds)


def test_timeline_skips_days_off():
    instance = tiny_instance(calendar=Calendar(2, np.array([0, 1, 0, 0])))
    timeline = Timeline(instance)
    assert timeline.first == -1
    assert timeline.position(1) == 2
    assert timeline.previous(2) == 1
    assert timeline.previous(3) == 1
    assert list(timeline.run_window(3)) == [1, 2]
    assert timeline.day_off(-5) == 0


def test_start_flags_follow_the_previous_period(instance):
    timeline = Timeline(instance)
    history = np.array([0, 1, 1, 0, 1, 1])
    starts = start_flags(timeline, history)
    # position 0 has no known previous period
    assert starts.tolist() == [0, 1, 0, 0, 1, 0]


def test_tiny_plan_matches_its_description(plan):
    assert plan.lots.tolist() == [[2, 2, 2, 2], [0, 2, 2, 0]]
    assert plan.backorder.sum() == 0
    assert plan.inventory.tolist() == [[0, 0, 0, 0], [0, 0, 2, 0]]
