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

SCHEMA_VERSION = "1.0"
PLAN_SCHEMA_VERSION = "1.0"

PROFILE_ENV_VAR = "VULCANPLAN_SOLVER_PROFILES"
DEFAULT_PROFILE = "highspy"

DEFAULT_LSSP_TIME_LIMIT = 1800.0
DEFAULT_ASSP_TIME_LIMIT = 3600.0
DEFAULT_POOL_SIZE = 5
DEFAULT_MIP_GAP = 1e-4
DEFAULT_THREADS = 1
EMPHASIS_HINTS = ("balanced", "feasibility", "optimality")

INTEGRALITY_TOLERANCE = 1e-6
DEFAULT_VIOLATION_CAP = 1000

# weights of the best calibration row (levels 1, 4, 4, 4, 4)
CALIBRATED_CLASS_WEIGHTS = (20.0, 16.0, 12.0)
CALIBRATED_OVERSTOCK_WEIGHT = 48.0
CALIBRATED_UNDERSTOCK_WEIGHT = 4.0

FACTOR_NAMES = ("BC1", "OS", "BC2", "BC3", "US")
DEFAULT_FACTOR_LEVELS = {
    "BC1": (20.0, 40.0, 60.0, 80.0),
    "OS": (12.0, 24.0, 36.0, 48.0),
    "BC2": (4.0, 8.0, 12.0, 16.0),
    "BC3": (3.0, 6.0, 9.0, 12.0),
    "US": (1.0, 2.0, 3.0, 4.0),
}

REFERENCE_FLEXIBILITY = {
    "simultaneous_items": 43,
    "endings_per_macro": 18,
    "setups_per_period": 25,
    "setups_per_macro": 5,
    "min_run": 4,
    "setup_window": 7,
    "ending_window": 4,
}

DEFAULT_INVENTORY_CONFIGS = (("low", 0.25), ("medium", 1.0), ("high", 2.0))
REFERENCE_SCENARIO = "S0"

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_SOLVER = 4
