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

from itertools import combinations

import numpy as np

# standard L16(4^5), 1-based levels
L16 = (
    (1, 1, 1, 1, 1),
    (1, 2, 2, 2, 2),
    (1, 3, 3, 3, 3),
    (1, 4, 4, 4, 4),
    (2, 1, 2, 3, 4),
    (2, 2, 1, 4, 3),
    (2, 3, 4, 1, 2),
    (2, 4, 3, 2, 1),
    (3, 1, 3, 4, 2),
    (3, 2, 4, 3, 1),
    (3, 3, 1, 2, 4),
    (3, 4, 2, 1, 3),
    (4, 1, 4, 2, 3),
    (4, 2, 3, 1, 4),
    (4, 3, 2, 4, 1),
    (4, 4, 1, 3, 2),
)


def l16_array() -> np.ndarray:
    return np.array(L16, dtype=np.int64)


def is_orthogonal(array: np.ndarray, levels: int = 4) -> bool:
    """Strength-2 balance: every level pair shows up equally often in every
    pair of columns."""
    rows, columns = array.shape
    if rows % (levels * levels):
        return False
    expected = rows // (levels * levels)
    for a, b in combinations(range(columns), 2):
        counts = np.zeros((levels, levels), dtype=np.int64)
        for x, y in zip(array[:, a], array[:, b]):
            counts[x - 1, y - 1] += 1
        if (counts != expected).any():
            return False
    return True
