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

from .model import (
    BINARY,
    INTEGER,
    CONTINUOUS,
    LE,
    GE,
    EQ,
    Variable,
    LinearConstraint,
    MilpModel,
    LinExpr,
    ModelBuilder,
    ModelSize,
    key,
    model_size,
    constraint_counts,
    table_one,
    dense_size,
)
from .export import NameMap, export_lp, export_mps, mps_names, write_model
from .parse import (
    OPTIMAL,
    FEASIBLE,
    INFEASIBLE,
    TIME_LIMIT,
    ERROR,
    WITH_VALUES,
    ParsedSolution,
    parse_cbc,
    parse_highs,
)
from .solve import (
    RawSolution,
    RawPool,
    HighsPlugin,
    CommandAdapter,
    adapter_for,
    solve,
    solve_pool,
    no_good_cut,
    solver_options,
)
