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

from dataclasses import replace

import numpy as np

from instance import Instance, validate
from util import RestrictionError


def restrict_eligibility(instance: Instance, items, presses) -> Instance:
    """Limit the tires of the given items to the allowed presses.

    Indices are 0-based. Tires of other items keep their eligibility, and
    presses=None leaves the instance unchanged.
    """
    if presses is None:
        return instance
    items = [int(i) for i in items]
    presses = [int(p) for p in presses]
    if bad := [i for i in items if not 0 <= i < instance.N]:
        raise RestrictionError(f"items {bad} are outside 0..{instance.N - 1}")
    if bad := [p for p in presses if not 0 <= p < instance.P]:
        raise RestrictionError(f"presses {bad} are outside 0..{instance.P - 1}")

    tires = sorted({int(instance.item_tire[i]) for i in items})
    allowed = np.zeros(instance.P, dtype=bool)
    allowed[presses] = True
    eligibility = np.array(instance.eligibility, copy=True)
    for a in tires:
        eligibility[a, ~allowed] = 0
    if empty := [a for a in tires if eligibility[a].sum() == 0]:
        raise RestrictionError(f"tires {empty} are left without an eligible press")

    restricted = replace(instance, eligibility=eligibility)
    if errors := validate(restricted):
        raise RestrictionError(
            "restriction breaks the instance: " + "; ".join(str(e) for e in errors[:5])
        )
    return restricted


def scale_inventory(instance: Instance, multiplier: float) -> Instance:
    if multiplier < 0:
        raise RestrictionError(f"inventory multiplier {multiplier} is negative")
    inventory = np.rint(instance.initial_inventory * multiplier).astype(np.int64)
    return replace(instance, initial_inventory=inventory)


def press_counts(instance: Instance, items) -> dict[int, int]:
    """Eligible press count per tire of the given items."""
    tires = sorted({int(instance.item_tire[int(i)]) for i in items})
    return {a: int(instance.eligibility[a].sum()) for a in tires}
