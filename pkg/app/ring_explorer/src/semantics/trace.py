from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..core.algorithm import Algorithm
from ..exceptions import ChoiceError
from .choice import AdversaryChoice
from .step import apply_choice, enabled_robots
from .system_state import SystemState

TURNSTILE = "⊢"


@dataclass(frozen=True)
class TraceStep:
    choice: AdversaryChoice
    state: SystemState


@dataclass
class Trace:
    initial: SystemState
    steps: list[TraceStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def final(self) -> SystemState:
        return self.steps[-1].state if self.steps else self.initial

    @property
    def choices(self) -> list[AdversaryChoice]:
        return [s.choice for s in self.steps]

    def states(self) -> list[SystemState]:
        return [self.initial, *(s.state for s in self.steps)]

    def visited(self) -> frozenset[int]:
        nodes: set[int] = set()
        for state in self.states():
            nodes |= state.occupied
        return frozenset(nodes)

    def append(self, choice: AdversaryChoice, state: SystemState) -> None:
        self.steps.append(TraceStep(choice, state))

    def replays(self, algorithm: Algorithm) -> bool:
        "each state is apply_choice of its predecessor"
        current = self.initial
        for step in self.steps:
            try:
                current = apply_choice(current, step.choice, algorithm)
            except ChoiceError:
                return False
            if current != step.state:
                return False
        return True

    def to_text(self) -> str:
        lines = [f"start {TURNSTILE} {self.initial.format()}"]
        lines.extend(f"{step.choice} {TURNSTILE} {step.state.format()}" for step in self.steps)
        return "\n".join(lines)

    def to_records(self, algorithm: Algorithm) -> list[dict[str, Any]]:
        records = []
        visited: set[int] = set()
        for number, state in enumerate(self.states()):
            visited |= state.occupied
            records.append(
                {
                    "step": number,
                    "choice": None if number == 0 else str(self.steps[number - 1].choice),
                    "state": state.format(),
                    "enabled": sorted(enabled_robots(state, algorithm)),
                    "coverage": sorted(visited),
                }
            )
        return records
