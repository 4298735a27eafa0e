from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, replace
from typing import Optional, cast

from ..core.color import DEFAULT_PALETTE, Color, Palette
from ..core.configuration import EMPTY_KEY, Configuration, NodeKey
from ..core.transform import Transform
from .scheduler import SchedulerModel

StateKey = tuple


@dataclass(frozen=True)
class RobotState:
    """A robot's position and light. 'pending' holds the absolute direction
    of a move decided in an ASYNC LC step and not yet performed.
    """

    id: int
    node: int
    color: Color
    pending: Optional[int] = None

    @property
    def is_idle(self) -> bool:
        return self.pending is None

    @property
    def phase(self) -> str:
        return "idle" if self.pending is None else f"pending({self.pending:+d})"

    def moved(self, n: int, direction: int, color: Optional[Color] = None) -> RobotState:
        return RobotState(self.id, (self.node + direction) % n, self.color if color is None else color)


class SystemState:
    def __init__(
        self,
        n: int,
        robots: Iterable[RobotState],
        model: SchedulerModel,
        palette: Palette = DEFAULT_PALETTE,
    ) -> None:
        self.n = n
        self.robots: tuple[RobotState, ...] = tuple(sorted(robots, key=lambda r: r.id))
        self.model = model
        self.palette = palette
        assert len({r.id for r in self.robots}) == len(self.robots), "robot ids must be unique"
        for r in self.robots:
            assert 0 <= r.node < n, f"robot {r.id} is off the ring"
            assert r.pending in (None, -1, 1), f"robot {r.id} has an invalid pending direction"
            assert r.pending is None or model is SchedulerModel.ASYNC, "pending moves exist only under ASYNC"
        self._configuration: Optional[Configuration] = None
        self._erased: Optional[StateKey] = None

    @classmethod
    def initial(cls, config: Configuration, model: SchedulerModel) -> SystemState:
        """All robots idle, numbered by node and then by palette order."""
        robots = []
        for node, m in enumerate(config.nodes):
            for color in config.palette.sort(m):
                robots.append(RobotState(id=len(robots), node=node, color=color))
        return cls(config.n, robots, model, palette=config.palette)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SystemState):
            return NotImplemented
        return (self.n, self.robots, self.model, self.palette) == (other.n, other.robots, other.model, other.palette)

    def __hash__(self) -> int:
        return hash((self.n, self.robots, self.model))

    def __repr__(self) -> str:
        return f"SystemState({self.format()!r}, {self.model.value})"

    @property
    def k(self) -> int:
        return len(self.robots)

    @property
    def configuration(self) -> Configuration:
        if self._configuration is None:
            self.set_configuration()
        return cast(Configuration, self._configuration)

    def set_configuration(self) -> None:
        nodes: list[list[Color]] = [[] for _ in range(self.n)]
        for r in self.robots:
            nodes[r.node].append(r.color)
        self._configuration = Configuration(nodes, palette=self.palette)

    @property
    def occupied(self) -> frozenset[int]:
        return frozenset(r.node for r in self.robots)

    @property
    def pending(self) -> frozenset[int]:
        return frozenset(r.id for r in self.robots if r.pending is not None)

    def robot(self, robot_id: int) -> RobotState:
        for r in self.robots:
            if r.id == robot_id:
                return r
        raise KeyError(robot_id)

    def with_robots(self, robots: Iterable[RobotState]) -> SystemState:
        return SystemState(self.n, robots, self.model, palette=self.palette)

    def transform(self, t: Transform) -> SystemState:
        """Robots keep their ids; pending directions follow reflections."""
        assert t.n == self.n, "transform acts on a ring of another size"
        robots = []
        for r in self.robots:
            pending = None if r.pending is None else t.map_direction(r.pending)
            robots.append(replace(r, node=t.map_node(r.node), color=t.map_color(r.color), pending=pending))
        return self.with_robots(robots)

    def key_under(self, t: Transform, keep_ids: bool) -> tuple[NodeKey, ...]:
        nodes: list[list[tuple[int, ...]]] = [[] for _ in range(self.n)]
        for r in self.robots:
            pending = 0 if r.pending is None else (1 if t.map_direction(r.pending) < 0 else 2)
            entry = (self.palette.rank(t.map_color(r.color)), pending)
            nodes[t.map_node(r.node)].append(entry + (r.id,) if keep_ids else entry)
        return tuple((0, tuple(sorted(entries))) if entries else EMPTY_KEY for entries in nodes)

    def erased_key(self) -> StateKey:
        "exact state with robot identities forgotten"
        if self._erased is None:
            self._erased = self.key_under(Transform.identity(self.n), keep_ids=False)
        return self._erased

    def canonical_key(self, keep_ids: bool = False) -> StateKey:
        return min(self.key_under(t, keep_ids) for t in Transform.dihedral(self.n))

    def format(self) -> str:
        text = self.configuration.format()
        pending = [f"{r.id}{r.pending:+d}" for r in self.robots if r.pending is not None]
        return f"{text} [{' '.join(pending)}]" if pending else text
