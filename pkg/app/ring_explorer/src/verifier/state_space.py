from __future__ import annotations

import logging
from collections import deque
from collections.abc import Hashable
from dataclasses import dataclass
from typing import Generic, Optional, TypeVar

from ..core.algorithm import Algorithm
from ..exceptions import ConfigurationError, StateLimitExceeded
from ..semantics.choice import AdversaryChoice
from ..semantics.scheduler import SymmetryMode
from ..semantics.step import apply_with_service, enabled_robots, enumerate_choices
from ..semantics.system_state import StateKey, SystemState
from ..settings import DEFAULT_STATE_LIMIT

logger = logging.getLogger(__name__)

Vertex = TypeVar("Vertex", bound=Hashable)


@dataclass(frozen=True)
class Edge:
    """'served' are the robots completing a full cycle on this edge; 'changing'
    is false for steps that leave the state exactly as it was.
    """

    choice: AdversaryChoice
    target: StateKey
    served: frozenset[int]
    reset: bool = False
    changing: bool = True


class ReachableGraph(Generic[Vertex]):
    """Breadth-first closure of an initial vertex under the adversary's choices,
    deduplicated by canonical keys. The first vertex found for a key is kept as
    its representative and expanded.
    """

    def __init__(
        self,
        initial: SystemState,
        algorithm: Algorithm,
        state_limit: int = DEFAULT_STATE_LIMIT,
        sym_mode: SymmetryMode = SymmetryMode.INDEPENDENT,
        keep_ids: bool = False,
    ) -> None:
        if state_limit < 1:
            raise ConfigurationError(f"the state limit must be positive, got {state_limit}")
        self.algorithm = algorithm
        self.state_limit = state_limit
        self.sym_mode = sym_mode
        self.keep_ids = keep_ids
        self.states: dict[StateKey, Vertex] = {}
        self.edges: dict[StateKey, list[Edge]] = {}
        self.parent: dict[StateKey, Optional[tuple[StateKey, Edge]]] = {}
        self.waiting: dict[StateKey, frozenset[int]] = {}
        self.quiescent: set[StateKey] = set()
        start = self.start(initial)
        self.root = self.key(start)
        self.states[self.root] = start
        self.parent[self.root] = None
        self._explore()

    def start(self, initial: SystemState) -> Vertex:
        return initial  # type: ignore[return-value]

    def system(self, vertex: Vertex) -> SystemState:
        return vertex  # type: ignore[return-value]

    def step(self, vertex: Vertex, target: SystemState) -> tuple[Vertex, bool]:
        return target, False  # type: ignore[return-value]

    def key(self, vertex: Vertex) -> StateKey:
        return self.system(vertex).canonical_key(self.keep_ids)

    @property
    def edge_count(self) -> int:
        return sum(len(edges) for edges in self.edges.values())

    def _explore(self) -> None:
        queue = deque([self.root])
        while queue:
            key = queue.popleft()
            vertex = self.states[key]
            system = self.system(vertex)
            edges: list[Edge] = []
            labels: set = set()
            for choice in enumerate_choices(system, self.algorithm, self.sym_mode):
                target, served = apply_with_service(system, choice, self.algorithm)
                successor, reset = self.step(vertex, target)
                target_key = self.key(successor)
                changing = target.erased_key() != system.erased_key()
                label = (target_key, served if self.keep_ids else None, reset, changing)
                if label in labels:
                    continue
                labels.add(label)
                edge = Edge(choice=choice, target=target_key, served=served, reset=reset, changing=changing)
                edges.append(edge)
                if target_key not in self.states:
                    if len(self.states) >= self.state_limit:
                        logger.warning("state limit %d reached with %d states queued", self.state_limit, len(queue) + 1)
                        raise StateLimitExceeded(self.state_limit, len(queue) + 1)
                    self.states[target_key] = successor
                    self.parent[target_key] = (key, edge)
                    queue.append(target_key)
            self.edges[key] = edges
            self.waiting[key] = enabled_robots(system, self.algorithm) | system.pending
            if not edges:
                self.quiescent.add(key)
        logger.debug("explored %d states and %d edges", len(self.states), self.edge_count)

    def stem(self, key: StateKey) -> list[Edge]:
        "the breadth-first path from the root to 'key'"
        path = []
        link = self.parent[key]
        while link is not None:
            previous, edge = link
            path.append(edge)
            link = self.parent[previous]
        path.reverse()
        return path


def build_reachable_graph(
    initial: SystemState,
    algorithm: Algorithm,
    bound: int = DEFAULT_STATE_LIMIT,
    sym_mode: SymmetryMode = SymmetryMode.INDEPENDENT,
    keep_ids: bool = False,
) -> ReachableGraph[SystemState]:
    return ReachableGraph(initial, algorithm, state_limit=bound, sym_mode=sym_mode, keep_ids=keep_ids)
