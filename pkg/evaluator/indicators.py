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

"""Setup, start, ending, activity and drum indicators recomputed from the
running history of a plan. Each indicator is the smallest value the model
rows allow, so the audit never trusts indicator values a plan may carry."""

import math
from dataclasses import dataclass

import numpy as np

from instance import Instance, Timeline, extend, start_flags

from .plan import PlanSolution


@dataclass(frozen=True)
class Indicators:
    setups: np.ndarray
    starts: np.ndarray
    history_starts: np.ndarray
    active: np.ndarray
    endings: np.ndarray
    drums: np.ndarray


def _setups(instance: Instance, timeline: Timeline, running: np.ndarray) -> np.ndarray:
    """A running period is a new setup unless the item ran on the same press
    within the suspension window, with no other item taking the press in
    between when the previous period was idle."""
    window = instance.flexibility.setup_window
    N, P, T = instance.N, instance.P, instance.T
    load = running.sum(axis=0)
    setups = np.zeros((N, P, T), dtype=np.int64)
    for t in range(1, T + 1):
        now = running[..., timeline.position(t)]
        lo = max(t - window, timeline.first)
        if lo <= t - 1:
            span = slice(timeline.position(lo), timeline.position(t))
            own = running[..., span].sum(axis=2)
            others = load[None, :, span].sum(axis=2) - own
        else:
            own = np.zeros((N, P), dtype=np.int64)
            others = np.zeros((N, P), dtype=np.int64)
        previous = timeline.previous(t) if timeline.day_off(t - 1) else t - 1
        if timeline.known(previous):
            before = running[..., timeline.position(previous)]
        else:
            before = np.zeros((N, P), dtype=np.int64)
        fresh = own == 0
        intruded = (before == 0) & (others > 0) if window > 0 else np.zeros_like(fresh)
        setups[..., t - 1] = (now > 0) & (fresh | intruded)
    return setups


def _endings(instance: Instance, timeline: Timeline, active: np.ndarray) -> np.ndarray:
    """An item ends a campaign in t when it ran in t - tau_e and never since."""
    window = instance.flexibility.ending_window
    endings = np.zeros((instance.N, instance.T), dtype=np.int64)
    if window == 0:
        return endings
    for t in range(1, instance.T + 1):
        back = t - window
        if not timeline.known(back):
            continue
        ran = active[:, timeline.position(back)] > 0
        since = active[:, timeline.position(back + 1) : timeline.position(t) + 1].sum(axis=1)
        endings[:, t - 1] = ran & (since == 0)
    return endings


def drum_need(molds: int, drum_yield: float) -> int:
    if drum_yield <= 0 or molds <= 0:
        return 0
    return int(math.ceil(molds / drum_yield - 1e-9))


def derive(instance: Instance, plan: PlanSolution) -> Indicators:
    timeline = Timeline(instance)
    warm = instance.warm_state
    running = extend(warm.running.astype(np.int64), (plan.running > 0).astype(np.int64))
    active = running.max(axis=1)
    starts = start_flags(timeline, running).astype(np.int64)

    molds = plan.running.sum(axis=1)
    drums = np.zeros((instance.N, instance.N_d, instance.T), dtype=np.int64)
    for i, d in zip(*np.nonzero(instance.drum_yield > 0)):
        for t in range(instance.T):
            drums[i, d, t] = drum_need(int(molds[i, t]), float(instance.drum_yield[i, d]))

    return Indicators(
        setups=_setups(instance, timeline, running),
        starts=starts[..., warm.depth :],
        history_starts=starts,
        active=active[:, warm.depth :],
        endings=_endings(instance, timeline, active),
        drums=drums,
    )
