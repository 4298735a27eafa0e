from __future__ import annotations

import logging
from collections import deque
from collections.abc import Callable, Collection
from typing import Optional, Union

from ..core.algorithm import Algorithm
from ..core.configuration import Configuration
from ..semantics.scheduler import SchedulerModel, SymmetryMode
from ..semantics.step import apply_with_service, enumerate_choices
from ..semantics.system_state import StateKey, SystemState
from ..semantics.trace import Trace
from ..settings import DEFAULT_STATE_LIMIT
from .coverage import CoverageGraph, CoverageState
from .scc import strongly_connected_components
from .state_space import Edge
from .verdict import Lasso, Objective, Outcome, TerminalTrace, Verdict

logger = logging.getLogger(__name__)

EdgeFilter = Callable[[Edge], bool]
Waypoint = tuple[StateKey, Optional[Edge]]


def _initial_state(initial: Union[SystemState, Configuration], model: Optional[SchedulerModel]) -> SystemState:
    if isinstance(initial, Configuration):
        return SystemState.initial(initial, model or SchedulerModel.FSYNC)
    if model is not None and model is not initial.model:
        return SystemState(initial.n, initial.robots, model, palette=initial.palette)
    return initial


def _path(
    graph: CoverageGraph, component: Collection[StateKey], source: StateKey, target: StateKey, internal: EdgeFilter, nonempty: bool = False
) -> list[Edge]:
    """Shortest path inside 'component' along internal edges."""
    if source == target and not nonempty:
        return []
    back: dict[StateKey, tuple[StateKey, Edge]] = {}
    seen: set[StateKey] = set() if nonempty else {source}
    queue = deque([source])
    while queue:
        key = queue.popleft()
        for edge in graph.edges[key]:
            if not internal(edge) or edge.target not in component or edge.target in seen:
                continue
            seen.add(edge.target)
            back[edge.target] = (key, edge)
            if edge.target == target:
                path = []
                current = target
                while True:
                    current, step = back[current]
                    path.append(step)
                    if current == source:
                        break
                path.reverse()
                return path
            queue.append(edge.target)
    raise AssertionError("component is not strongly connected")


def _justice_waypoints(
    graph: CoverageGraph, component: Collection[StateKey], internal: EdgeFilter, robots: list[int]
) -> Optional[list[Waypoint]]:
    """For every robot, a state of the component where it neither is enabled nor
    has a pending move, or an internal edge on which it completes a cycle.
    None when some robot can be starved forever inside the component.
    """
    waypoints: list[Waypoint] = []
    for robot in robots:
        resting = next((key for key in component if robot not in graph.waiting[key]), None)
        if resting is not None:
            waypoints.append((resting, None))
            continue
        serving = next(
            (
                (key, edge)
                for key in component
                for edge in graph.edges[key]
                if internal(edge) and edge.target in component and robot in edge.served
            ),
            None,
        )
        if serving is None:
            return None
        waypoints.append(serving)
    return waypoints


def _cycle(
    graph: CoverageGraph, component: Collection[StateKey], entry: StateKey, waypoints: list[Waypoint], internal: EdgeFilter
) -> list[Edge]:
    cycle: list[Edge] = []
    current = entry
    for source, edge in waypoints:
        cycle += _path(graph, component, current, source, internal)
        current = source
        if edge is not None:
            cycle.append(edge)
            current = edge.target
    cycle += _path(graph, component, current, entry, internal, nonempty=not cycle)
    return cycle


def _follow(graph: CoverageGraph, start: CoverageState, path: list[Edge]) -> tuple[Trace, CoverageState]:
    """Replays a path of canonical edges from a concrete state, picking at each
    step a choice whose outcome has the edge's key, preferring the same served robots.
    """
    trace = Trace(initial=start.system)
    current = start
    for edge in path:
        system = current.system
        picked = None
        for choice in enumerate_choices(system, graph.algorithm, graph.sym_mode):
            target, served = apply_with_service(system, choice, graph.algorithm)
            if (target.erased_key() != system.erased_key()) != edge.changing:
                continue
            successor, reset = graph.step(current, target)
            if reset != edge.reset or graph.key(successor) != edge.target:
                continue
            if picked is None or served == edge.served:
                picked = (choice, successor)
            if served == edge.served:
                break
        assert picked is not None, "canonical edge has no concrete counterpart"
        choice, current = picked
        trace.append(choice, current.system)
    return trace, current


def _lasso(
    graph: CoverageGraph, start: CoverageState, component: list[StateKey], internal: EdgeFilter, waypoints: list[Waypoint]
) -> Lasso:
    order = {key: position for position, key in enumerate(graph.states)}
    members = set(component)
    entry = min(component, key=order.__getitem__)
    stem, reached = _follow(graph, start, graph.stem(entry))
    cycle, _ = _follow(graph, reached, _cycle(graph, members, entry, waypoints, internal))
    return Lasso(stem=stem, cycle=cycle, keep_ids=graph.keep_ids)


def _fails(graph: CoverageGraph, objective: Objective, model: SchedulerModel, witness, reason: str) -> Verdict:
    verdict = Verdict(
        outcome=Outcome.FAILS,
        objective=objective,
        model=model,
        witness=witness,
        reason=reason,
        states=len(graph.states),
        edges=graph.edge_count,
    )
    logger.info("%s", verdict)
    return verdict


def check_perpetual_exploration(
    initial: Union[SystemState, Configuration],
    algorithm: Algorithm,
    model: Optional[SchedulerModel] = None,
    state_limit: int = DEFAULT_STATE_LIMIT,
    sym_mode: SymmetryMode = SymmetryMode.INDEPENDENT,
) -> Verdict:
    """Holds iff no fair execution eventually stops visiting some node.

    Coverage resets whenever every node has been visited, so a counterexample
    is a fair cycle without resets, or a quiescent state leaving nodes empty.
    Fairness is justice per robot; it needs robot identities, which the graph
    keeps unless the model is FSYNC.
    """
    system = _initial_state(initial, model)
    keep_ids = system.model.needs_fairness
    graph = CoverageGraph(system, algorithm, reset=True, state_limit=state_limit, sym_mode=sym_mode, keep_ids=keep_ids)
    start = CoverageState.start(system)

    for key in graph.states:
        if key in graph.quiescent and len(graph.states[key].system.occupied) < system.n:
            trace, reached = _follow(graph, start, graph.stem(key))
            uncovered = frozenset(range(system.n)) - reached.system.occupied
            return _fails(graph, Objective.PERPETUAL, system.model, TerminalTrace(trace, uncovered), "under-covered")

    def internal(edge: Edge) -> bool:
        return not edge.reset

    robots = [r.id for r in system.robots]

    def successors(key: StateKey) -> list[StateKey]:
        return [e.target for e in graph.edges[key] if internal(e)]

    for component in strongly_connected_components(graph.states, successors):
        waypoints: Optional[list[Waypoint]] = []
        if keep_ids:
            waypoints = _justice_waypoints(graph, set(component), internal, robots)
            if waypoints is None:
                continue
        lasso = _lasso(graph, start, component, internal, waypoints or [])
        return _fails(graph, Objective.PERPETUAL, system.model, lasso, "coverage stalls")

    verdict = Verdict(
        outcome=Outcome.HOLDS,
        objective=Objective.PERPETUAL,
        model=system.model,
        states=len(graph.states),
        edges=graph.edge_count,
    )
    logger.info("%s", verdict)
    return verdict


def check_terminating_exploration(
    initial: Union[SystemState, Configuration],
    algorithm: Algorithm,
    model: Optional[SchedulerModel] = None,
    state_limit: int = DEFAULT_STATE_LIMIT,
    sym_mode: SymmetryMode = SymmetryMode.INDEPENDENT,
) -> Verdict:
    """Holds iff the steps that change the state admit no cycle and every state
    without such a step is quiescent with all nodes visited.
    """
    system = _initial_state(initial, model)
    graph = CoverageGraph(system, algorithm, reset=False, state_limit=state_limit, sym_mode=sym_mode)
    start = CoverageState.start(system)

    def internal(edge: Edge) -> bool:
        return edge.changing

    def successors(key: StateKey) -> list[StateKey]:
        return [e.target for e in graph.edges[key] if internal(e)]

    for component in strongly_connected_components(graph.states, successors):
        lasso = _lasso(graph, start, component, internal, [])
        return _fails(graph, Objective.TERMINATING, system.model, lasso, "non-termination")

    for key, vertex in graph.states.items():
        if any(internal(e) for e in graph.edges[key]):
            continue
        if key in graph.quiescent and vertex.complete:
            continue
        trace, reached = _follow(graph, start, graph.stem(key))
        reason = "under-covered" if key in graph.quiescent else "livelock"
        return _fails(graph, Objective.TERMINATING, system.model, TerminalTrace(trace, reached.uncovered), reason)

    verdict = Verdict(
        outcome=Outcome.HOLDS,
        objective=Objective.TERMINATING,
        model=system.model,
        states=len(graph.states),
        edges=graph.edge_count,
    )
    logger.info("%s", verdict)
    return verdict
