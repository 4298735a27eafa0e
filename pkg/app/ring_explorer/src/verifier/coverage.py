from __future__ import annotations

from dataclasses import dataclass

from ..core.algorithm import Algorithm
from ..core.transform import Transform
from ..semantics.scheduler import SymmetryMode
from ..semantics.system_state import StateKey, SystemState
from ..settings import DEFAULT_STATE_LIMIT
from .state_space import ReachableGraph


@dataclass(frozen=True)
class CoverageState:
    """A system state with the nodes visited since the last reset.
    Initially occupied nodes count as visited.
    """

    system: SystemState
    visited: frozenset[int]

    @classmethod
    def start(cls, system: SystemState) -> CoverageState:
        return cls(system, system.occupied)

    @property
    def complete(self) -> bool:
        return len(self.visited) == self.system.n

    @property
    def uncovered(self) -> frozenset[int]:
        return frozenset(range(self.system.n)) - self.visited

    def advance(self, target: SystemState, reset: bool) -> tuple[CoverageState, bool]:
        """With 'reset', reaching every node starts a new round from the nodes occupied at that instant."""
        visited = self.visited | target.occupied
        if reset and len(visited) == target.n:
            return CoverageState(target, target.occupied), True
        return CoverageState(target, visited), False

    def canonical_key(self, keep_ids: bool) -> StateKey:
        return min(
            (self.system.key_under(t, keep_ids), tuple(sorted(t.map_node(v) for v in self.visited)))
            for t in Transform.dihedral(self.system.n)
        )


class CoverageGraph(ReachableGraph[CoverageState]):
    def __init__(
        self,
        initial: SystemState,
        algorithm: Algorithm,
        reset: bool,
        state_limit: int = DEFAULT_STATE_LIMIT,
        sym_mode: SymmetryMode = SymmetryMode.INDEPENDENT,
        keep_ids: bool = False,
    ) -> None:
        self.reset = reset
        super().__init__(initial, algorithm, state_limit=state_limit, sym_mode=sym_mode, keep_ids=keep_ids)

    def start(self, initial: SystemState) -> CoverageState:
        return CoverageState.start(initial)

    def system(self, vertex: CoverageState) -> SystemState:
        return vertex.system

    def step(self, vertex: CoverageState, target: SystemState) -> tuple[CoverageState, bool]:
        return vertex.advance(target, self.reset)

    def key(self, vertex: CoverageState) -> StateKey:
        return vertex.canonical_key(self.keep_ids)
