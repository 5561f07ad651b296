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

from .array import L16, l16_array, is_orthogonal
from .doe import (
    RANKING_KEYS,
    DoeRow,
    DoeResult,
    sn_ratio,
    main_effects,
    run_doe,
    rank_by_company_rules,
    doe_frame,
    write_doe,
)
