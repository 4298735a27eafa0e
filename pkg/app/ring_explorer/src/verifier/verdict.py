from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from ..core.algorithm import Algorithm
from ..semantics.scheduler import SchedulerModel
from ..semantics.trace import Trace


class Objective(Enum):
    PERPETUAL = "perpetual"
    TERMINATING = "terminating"


class Outcome(Enum):
    HOLDS = "holds"
    FAILS = "fails"


@dataclass(frozen=True)
class Lasso:
    """An infinite execution: 'stem' leads to the first state of 'cycle',
    and 'cycle' ends in a state equivalent to where it started.
    """

    stem: Trace
    cycle: Trace
    keep_ids: bool = False

    def replays(self, algorithm: Algorithm) -> bool:
        return (
            self.stem.replays(algorithm)
            and self.cycle.replays(algorithm)
            and self.cycle.initial == self.stem.final
            and len(self.cycle) > 0
            and self.cycle.final.canonical_key(self.keep_ids) == self.cycle.initial.canonical_key(self.keep_ids)
        )


@dataclass(frozen=True)
class TerminalTrace:
    trace: Trace
    uncovered: frozenset[int]

    def replays(self, algorithm: Algorithm) -> bool:
        return self.trace.replays(algorithm)


Witness = Union[Lasso, TerminalTrace]


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    objective: Objective
    model: SchedulerModel
    witness: Optional[Witness] = None
    reason: str = ""
    states: int = 0
    edges: int = 0

    @property
    def holds(self) -> bool:
        return self.outcome is Outcome.HOLDS

    @property
    def uncovered(self) -> frozenset[int]:
        if isinstance(self.witness, TerminalTrace):
            return self.witness.uncovered
        if isinstance(self.witness, Lasso):
            return frozenset(range(self.witness.cycle.initial.n)) - self.witness.cycle.visited()
        return frozenset()

    def __str__(self) -> str:
        text = f"{self.objective.value} exploration under {self.model.value}: {self.outcome.value}"
        return f"{text} ({self.reason})" if self.reason else text
