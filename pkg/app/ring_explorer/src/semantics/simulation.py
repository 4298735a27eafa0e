from __future__ import annotations

import logging
import random
from abc import ABC, abstractmethod
from collections.abc import Iterable
from typing import Optional

from ..core.algorithm import Algorithm
from ..exceptions import ChoiceError
from ..settings import DEFAULT_MAX_STEPS
from .choice import AdversaryChoice
from .scheduler import SymmetryMode
from .step import apply_with_service, enabled_robots, enumerate_choices, is_quiescent
from .system_state import SystemState
from .trace import Trace

logger = logging.getLogger(__name__)


class Policy(ABC):
    """An adversary that picks the next choice, or None to stop early."""

    @abstractmethod
    def select(
        self, state: SystemState, algorithm: Algorithm, sym_mode: SymmetryMode
    ) -> Optional[AdversaryChoice]:
        ...


class FirstPolicy(Policy):
    def select(self, state, algorithm, sym_mode):
        return next(enumerate_choices(state, algorithm, sym_mode), None)


class RandomPolicy(Policy):
    def __init__(self, seed: Optional[int] = None) -> None:
        self.seed = seed
        self.rng = random.Random(seed)

    def select(self, state, algorithm, sym_mode):
        choices = list(enumerate_choices(state, algorithm, sym_mode))
        return self.rng.choice(choices) if choices else None


class FairPolicy(Policy):
    """Serves the robot that has waited longest among the enabled or pending ones."""

    def __init__(self) -> None:
        self.last_served: dict[int, int] = {}
        self.clock = 0

    def select(self, state, algorithm, sym_mode):
        waiting = sorted(enabled_robots(state, algorithm) | state.pending, key=lambda i: (self.last_served.get(i, -1), i))
        best: Optional[tuple[tuple[int, int], AdversaryChoice]] = None
        for choice in enumerate_choices(state, algorithm, sym_mode):
            _, served = apply_with_service(state, choice, algorithm)
            rank = next((pos for pos, i in enumerate(waiting) if i in served), len(waiting))
            score = (rank, -len(served))
            if best is None or score < best[0]:
                best = (score, choice)
        if best is None:
            return None
        self.clock += 1
        _, served = apply_with_service(state, best[1], algorithm)
        for i in served:
            self.last_served[i] = self.clock
        return best[1]


class ScriptedPolicy(Policy):
    """Replays a fixed list of choices and stops when it runs out."""

    def __init__(self, choices: Iterable[AdversaryChoice]) -> None:
        self.choices = list(choices)
        self.position = 0

    def select(self, state, algorithm, sym_mode):
        if self.position >= len(self.choices):
            return None
        choice = self.choices[self.position]
        self.position += 1
        if choice not in set(enumerate_choices(state, algorithm, sym_mode)):
            raise ChoiceError(f"scripted choice {self.position} '{choice}' is not applicable to {state.format()}")
        return choice


def simulate(
    state: SystemState,
    algorithm: Algorithm,
    policy: Policy,
    max_steps: int = DEFAULT_MAX_STEPS,
    sym_mode: SymmetryMode = SymmetryMode.INDEPENDENT,
) -> Trace:
    """Runs at most 'max_steps' steps and stops early at quiescence."""
    trace = Trace(initial=state)
    current = state
    for _ in range(max_steps):
        if is_quiescent(current, algorithm):
            logger.debug("quiescent after %d steps", len(trace))
            break
        choice = policy.select(current, algorithm, sym_mode)
        if choice is None:
            break
        current, _ = apply_with_service(current, choice, algorithm)
        trace.append(choice, current)
    return trace
