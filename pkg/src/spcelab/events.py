"""Detection-event containers shared by the generators and the pairing layer.

An event is one detection attempt on one side of the experiment: a time tag,
the local setting, and an outcome coded -1/+1 for the two detectors and 0 for
"no click". Simulators produce :class:`EventLog` objects (array-backed, one per
side per setting pair); individual :class:`Event` records are materialized on
demand.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpecError

__all__ = ["Event", "EventLog"]

OUTCOMES = (-1, 0, 1)


@dataclass(frozen=True)
class Event:
    time_tag: float
    setting: object
    outcome: int


@dataclass(frozen=True, eq=False)
class EventLog:
    """All events of one side of one run, at a fixed local setting."""

    setting: object
    time_tags: np.ndarray
    outcomes: np.ndarray

    def __init__(self, setting, time_tags, outcomes):
        time_tags = np.asarray(time_tags, dtype=float)
        outcomes = np.asarray(outcomes, dtype=np.int8)
        if time_tags.shape != outcomes.shape or time_tags.ndim != 1:
            raise InvalidSpecError("time_tags and outcomes must be equal-length 1-d arrays")
        if outcomes.size and not np.isin(outcomes, OUTCOMES).all():
            raise InvalidSpecError("outcomes must lie in {-1, 0, +1}")
        object.__setattr__(self, "setting", setting)
        object.__setattr__(self, "time_tags", time_tags)
        object.__setattr__(self, "outcomes", outcomes)

    def __len__(self) -> int:
        return self.outcomes.size

    def __getitem__(self, i: int) -> Event:
        return Event(float(self.time_tags[i]), self.setting, int(self.outcomes[i]))

    def __iter__(self):
        for i in range(len(self)):
            yield self[i]

    def clicks(self):
        """(emission indices, time tags, outcomes) of the non-zero events."""
        mask = self.outcomes != 0
        idx = np.flatnonzero(mask)
        return idx, self.time_tags[idx], self.outcomes[idx]

    @staticmethod
    def concatenate(logs: "list[EventLog]") -> "EventLog":
        if not logs:
            raise InvalidSpecError("cannot concatenate zero logs")
        setting = logs[0].setting
        if any(log.setting != setting for log in logs):
            raise InvalidSpecError("cannot concatenate logs with different settings")
        return EventLog(
            setting,
            np.concatenate([log.time_tags for log in logs]),
            np.concatenate([log.outcomes for log in logs]),
        )
