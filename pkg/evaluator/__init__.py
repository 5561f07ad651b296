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

from .plan import (
    PlanSolution,
    PlanLoader,
    fill_inventory,
    plan_from_production,
    empty_plan,
    concatenate_plans,
    plan_to_dict,
    plan_from_dict,
    dumps_plan,
    write_plan,
)
from .indicators import Indicators, derive, drum_need
from .feasibility import (
    Violation,
    Audit,
    audit,
    check_feasibility,
    violations_frame,
    write_violations,
)
from .kpi import (
    KpiReport,
    compute_kpis,
    contributions,
    stock_deviations,
    kpi_frame,
    write_kpis,
    read_kpis,
)
from .compare import NA, GapReport, gap, compare, compare_many, format_gaps
