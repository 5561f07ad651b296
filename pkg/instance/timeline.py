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

"""Look-backs over the calendar, shared by the model builders and the audit.

Periods are numbered as in the model: 1..T inside the horizon and
0, -1, ... for the warm history. Extended arrays put the oldest warm period
at position 0, so period t sits at position t + depth - 1.
"""

import numpy as np

from .classes import Instance


class Timeline:
    def __init__(self, instance: Instance) -> None:
        self.depth = instance.warm_state.depth
        self.T = instance.T
        self.min_run = instance.flexibility.min_run
        self.first = 1 - self.depth
        self.off = np.concatenate(
            [instance.warm_state.days_off, instance.calendar.days_off]
        ).astype(np.int64)

    def position(self, t: int) -> int:
        return t + self.depth - 1

    def known(self, t: int) -> bool:
        return self.first <= t <= self.T

    def day_off(self, t: int) -> int:
        return int(self.off[self.position(t)]) if self.known(t) else 0

    def days_off_between(self, lo: int, hi: int) -> int:
        return sum(self.day_off(o) for o in range(lo, hi + 1))

    def previous(self, t: int) -> int:
        """Period compared with t to detect a new production, skipping back
        over the days off of the last min-run periods."""
        if self.day_off(t - 1) == 0:
            return t - 1
        return t - 1 - self.days_off_between(t - self.min_run, t - 1)

    def run_window(self, t: int) -> range:
        lo = t - self.min_run - self.days_off_between(t - self.min_run, t - 1)
        return range(lo, t)

    def horizon(self) -> range:
        return range(1, self.T + 1)

    def history(self) -> range:
        return range(self.first, 1)


def extend(warm: np.ndarray, values: np.ndarray) -> np.ndarray:
    """Prepend the warm history along the last axis."""
    return np.concatenate([warm, values], axis=-1)


def start_flags(timeline: Timeline, running: np.ndarray) -> np.ndarray:
    """Minimal start indicators over an extended history.

    A period starts a run when it is running and its previous period is not.
    Periods whose previous period is unknown never start a run.
    """
    starts = np.zeros_like(running, dtype=np.int8)
    for t in range(timeline.first, timeline.T + 1):
        prev = timeline.previous(t)
        if not timeline.known(prev):
            continue
        now = running[..., timeline.position(t)] > 0
        before = running[..., timeline.position(prev)] > 0
        starts[..., timeline.position(t)] = now & ~before
    return starts
