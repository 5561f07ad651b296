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

from .weights import Normalizers, compute_normalizers, objective_coefficients
from .families import BuildOptions, PressLayout
from .integrated import build_integrated, decode_plan, decode_press_arrays, decode_inventory
from .lssp import (
    LsspPlan,
    build_lssp,
    decode_lssp,
    extract_pool,
    objective_terms,
    pattern_ids,
)
from .assp import (
    AsspResult,
    build_assp,
    decode_assignment,
    accept,
    build_rebalance,
    decode_rebalance,
)
