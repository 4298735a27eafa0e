from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import combinations, product

from ..core.algorithm import Algorithm
from ..core.rule import Decision
from ..exceptions import ChoiceError
from .choice import AdversaryChoice, AsyncLC, AsyncM, FsyncChoice, Resolutions, SsyncChoice
from .scheduler import SchedulerModel, SymmetryMode
from .system_state import RobotState, SystemState

Options = dict[int, tuple[Decision, ...]]


def robot_options(state: SystemState, algorithm: Algorithm) -> Options:
    """Sorted decision options of every idle enabled robot."""
    config = state.configuration
    options: Options = {}
    for r in state.robots:
        if r.pending is None:
            forward, _ = config.robot_views(r.node, r.color)
            decisions = algorithm.decisions(forward)
            if decisions:
                options[r.id] = tuple(sorted(decisions))
    return options


def enabled_robots(state: SystemState, algorithm: Algorithm) -> frozenset[int]:
    return frozenset(robot_options(state, algorithm))


def is_quiescent(state: SystemState, algorithm: Algorithm) -> bool:
    return not state.pending and not robot_options(state, algorithm)


def _resolutions(
    state: SystemState, activated: Sequence[int], options: Options, sym_mode: SymmetryMode
) -> Iterator[Resolutions]:
    choosers = [i for i in activated if len(options[i]) > 1]
    if sym_mode is SymmetryMode.LOCKED:
        groups: dict[tuple[int, str], list[int]] = {}
        for i in choosers:
            r = state.robot(i)
            groups.setdefault((r.node, r.color), []).append(i)
        members = list(groups.values())
        for combo in product(*(options[g[0]] for g in members)):
            yield tuple(sorted((i, d) for g, d in zip(members, combo) for i in g))
    else:
        for combo in product(*(options[i] for i in choosers)):
            yield tuple(zip(choosers, combo))


def enumerate_choices(
    state: SystemState, algorithm: Algorithm, sym_mode: SymmetryMode = SymmetryMode.INDEPENDENT
) -> Iterator[AdversaryChoice]:
    """Every adversary choice applicable to 'state'. Activations of robots that
    are not enabled are no-ops and are left out.
    """
    options = robot_options(state, algorithm)
    if state.model is SchedulerModel.FSYNC:
        if options:
            for resolutions in _resolutions(state, sorted(options), options, sym_mode):
                yield FsyncChoice(resolutions)
    elif state.model is SchedulerModel.SSYNC:
        ids = sorted(options)
        for size in range(1, len(ids) + 1):
            for subset in combinations(ids, size):
                for resolutions in _resolutions(state, subset, options, sym_mode):
                    yield SsyncChoice(subset, resolutions)
    else:
        for r in state.robots:
            if r.pending is not None:
                yield AsyncM(r.id)
            elif r.id in options:
                if len(options[r.id]) == 1:
                    yield AsyncLC(r.id)
                else:
                    for d in options[r.id]:
                        yield AsyncLC(r.id, d)


def _resolve(activated: Sequence[int], resolutions: Resolutions, options: Options) -> dict[int, Decision]:
    picks = dict(resolutions)
    unknown = set(picks) - set(activated)
    if unknown:
        raise ChoiceError(f"resolutions given for robots {sorted(unknown)} that are not activated")
    decisions = {}
    for i in activated:
        available = options[i]
        if i in picks:
            if picks[i] not in available:
                raise ChoiceError(f"robot {i} cannot decide {picks[i]}, its options are {', '.join(map(str, available))}")
            decisions[i] = picks[i]
        elif len(available) == 1:
            decisions[i] = available[0]
        else:
            raise ChoiceError(f"robot {i} has options {', '.join(map(str, available))} and needs a resolution")
    return decisions


def apply_with_service(
    state: SystemState, choice: AdversaryChoice, algorithm: Algorithm
) -> tuple[SystemState, frozenset[int]]:
    """The successor state together with the robots that complete a full
    Look-Compute-Move cycle in this step.
    """
    if choice.model is not state.model:
        raise ChoiceError(f"{choice.model.value} choice {choice} applied to a {state.model.value} state")
    options = robot_options(state, algorithm)
    if isinstance(choice, (FsyncChoice, SsyncChoice)):
        if isinstance(choice, FsyncChoice):
            activated: tuple[int, ...] = tuple(sorted(options))
            if not activated:
                raise ChoiceError("no robot is enabled")
        else:
            activated = choice.subset
            idle = [i for i in activated if i not in options]
            if not activated or idle:
                raise ChoiceError(f"robots {idle} are not enabled" if idle else "empty activation subset")
        decisions = _resolve(activated, choice.resolutions, options)
        robots = []
        for r in state.robots:
            d = decisions.get(r.id)
            robots.append(r if d is None else r.moved(state.n, d.direction, d.new_color))
        return state.with_robots(robots), frozenset(activated)
    if isinstance(choice, AsyncLC):
        if choice.robot not in options:
            raise ChoiceError(f"robot {choice.robot} is not an idle enabled robot")
        resolutions = ((choice.robot, choice.resolution),) if choice.resolution is not None else ()
        d = _resolve((choice.robot,), resolutions, options)[choice.robot]
        robots = []
        for r in state.robots:
            if r.id == choice.robot:
                r = RobotState(r.id, r.node, d.new_color, None if d.stays else d.direction)
            robots.append(r)
        return state.with_robots(robots), frozenset((choice.robot,) if d.stays else ())
    if choice.robot not in state.pending:
        raise ChoiceError(f"robot {choice.robot} has no pending move")
    robots = []
    for r in state.robots:
        if r.id == choice.robot:
            r = r.moved(state.n, r.pending)  # type: ignore[arg-type]
        robots.append(r)
    return state.with_robots(robots), frozenset((choice.robot,))


def apply_choice(state: SystemState, choice: AdversaryChoice, algorithm: Algorithm) -> SystemState:
    """Simultaneous moves are computed from the common pre-state; an ASYNC
    move uses the direction recorded at LC time whatever the ring looks like now.
    """
    return apply_with_service(state, choice, algorithm)[0]


def successors(
    state: SystemState,
    algorithm: Algorithm,
    sym_mode: SymmetryMode = SymmetryMode.INDEPENDENT,
    distinct: bool = True,
) -> list[tuple[AdversaryChoice, SystemState]]:
    """One-step outcomes; with 'distinct' only the first choice leading to each
    canonical identity-erased successor is kept. A quiescent state has none.
    """
    result = []
    seen: set = set()
    for choice in enumerate_choices(state, algorithm, sym_mode):
        target = apply_choice(state, choice, algorithm)
        if distinct:
            key = target.canonical_key(False)
            if key in seen:
                continue
            seen.add(key)
        result.append((choice, target))
    return result
