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

from config import RunConfig, SolverConfig
from util import set_verbose

from builders import tiny_instance, tiny_plan


@pytest.fixture(autouse=True)
def quiet_logs():
    set_verbose(False)
    yield
    set_verbose(True)


@pytest.fixture
def instance():
    return tiny_instance()


@pytest.fixture
def plan(instance):
    return tiny_plan(instance)


@pytest.fixture
def highs():
    return pytest.importorskip("highspy")


@pytest.fixture
def exact_solver(highs):
    return SolverConfig(time_limit=60.0, gap=0.0)


@pytest.fixture
def run_config(highs):
    return RunConfig(lssp_time_limit=60.0, assp_time_limit=60.0, pool_size=2, gap=0.0)
