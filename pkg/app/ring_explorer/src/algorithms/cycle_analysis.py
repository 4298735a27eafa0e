from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import Optional

from ..core.algorithm import Algorithm
from ..core.configuration import Configuration
from ..core.rule import Rule
from ..semantics.choice import SsyncChoice
from ..semantics.scheduler import SchedulerModel
from ..semantics.step import apply_choice, enumerate_choices
from ..semantics.system_state import SystemState
from ..settings import REFERENCE_RING_SIZE
from .appendix_rules import APPENDIX_RULES, AppendixRuleCatalog
from .config_classes import CATALOG

logger = logging.getLogger(__name__)

EXPLORING_CLASS = "C_exp"


def class_label(config: Configuration) -> str:
    "the canonical form without its trailing empty nodes, e.g. 'G,GW'"
    entries = config.canonical[0].format().split(",")
    while entries and entries[-1] == ".":
        entries.pop()
    return ",".join(entries)


def block_start(config: Configuration) -> int:
    "the first node, in increasing index order, of the arc the robots occupy"
    occupied = config.occupied
    starts = [v for v in occupied if (v - 1) % config.n not in occupied]
    return min(starts) if starts else 0


def _signed(shift: int, n: int) -> int:
    shift %= n
    return shift - n if shift > n // 2 else shift


def rule_outcomes(config: Configuration, rule: Rule) -> list[Configuration]:
    """Configurations reached when a single robot enabled by 'rule' performs it."""
    state = SystemState.initial(config, SchedulerModel.SSYNC)
    algorithm = Algorithm(rule.label, [rule], palette=config.palette)
    outcomes: list[Configuration] = []
    for choice in enumerate_choices(state, algorithm):
        if not isinstance(choice, SsyncChoice) or len(choice.subset) != 1:
            continue
        target = apply_choice(state, choice, algorithm).configuration
        if target not in outcomes:
            outcomes.append(target)
    return outcomes


@dataclass(frozen=True)
class Transition:
    source: str
    rule: str
    target: str
    displacement: int
    leaves: bool = False

    def __str__(self) -> str:
        arrow = f"-{self.rule}->"
        return f"{self.source} {arrow} {self.target}" + (" (leaves C_exp)" if self.leaves else "")


@dataclass
class TransitionGraph:
    """Classes of C_exp up to rotation and reflection, as placed on the reference
    ring, with one transition per rule and distinct successor class.
    """

    n: int
    classes: dict[str, Configuration] = field(default_factory=dict)
    rules: dict[str, Rule] = field(default_factory=dict)
    transitions: list[Transition] = field(default_factory=list)

    @property
    def edges(self) -> list[Transition]:
        return [t for t in self.transitions if not t.leaves]

    @property
    def exits(self) -> list[Transition]:
        return [t for t in self.transitions if t.leaves]

    def edges_from(self, label: str) -> list[Transition]:
        return [t for t in self.edges if t.source == label]


def cexp_transition_graph(rules: Iterable[Rule], n: int = REFERENCE_RING_SIZE) -> TransitionGraph:
    graph = TransitionGraph(n=n, rules={r.label: r for r in rules})
    for member in CATALOG.members(EXPLORING_CLASS, n):
        graph.classes.setdefault(class_label(member), member.canonical[0])
    for label, config in graph.classes.items():
        for rule in graph.rules.values():
            seen: set[str] = set()
            for outcome in rule_outcomes(config, rule):
                target = class_label(outcome)
                if target in seen:
                    continue
                seen.add(target)
                displacement = _signed(block_start(outcome) - block_start(config), n)
                leaves = not CATALOG.contains(EXPLORING_CLASS, outcome)
                graph.transitions.append(Transition(label, rule.label, target, displacement, leaves))
    logger.debug("%d classes, %d transitions, %d exits", len(graph.classes), len(graph.edges), len(graph.exits))
    return graph


def simple_cycles(graph: TransitionGraph) -> Iterator[list[Transition]]:
    """Every simple cycle once, entered at its earliest class in catalog order.
    Parallel transitions under different rules give different cycles.
    """
    order = list(graph.classes)
    for position, start in enumerate(order):
        allowed = set(order[position:])

        def extend(label: str, path: list[Transition], on_path: set[str]) -> Iterator[list[Transition]]:
            for t in graph.edges_from(label):
                if t.target == start:
                    yield path + [t]
                elif t.target in allowed and t.target not in on_path:
                    yield from extend(t.target, path + [t], on_path | {t.target})

        yield from extend(start, [], {start})


def _label_order(label: str) -> tuple[int, str]:
    return (int(label[1:]), "") if label[1:].isdigit() else (-1, label)


@dataclass(frozen=True)
class CycleAnalysis:
    rules: frozenset[str]
    transition_sequence: tuple[tuple[str, str], ...]
    displacement: int

    @property
    def progressing(self) -> bool:
        return self.displacement != 0

    def rule_set(self) -> str:
        ordered = sorted(self.rules, key=_label_order)
        return "{" + ",".join(ordered) + "}"

    def __str__(self) -> str:
        steps = " ".join(f"{member} -{rule}->" for member, rule in self.transition_sequence)
        return f"{self.rule_set()}: {steps} {self.transition_sequence[0][0]} (displacement {self.displacement:+d})"


def cycle_displacement(graph: TransitionGraph, cycle: list[Transition]) -> int:
    """Net shift of the robot block after following the cycle once on the ring,
    positive toward increasing node indices.
    """
    config = graph.classes[cycle[0].source]
    begin = block_start(config)
    for t in cycle:
        reached: Optional[Configuration] = None
        for outcome in rule_outcomes(config, graph.rules[t.rule]):
            if class_label(outcome) == t.target:
                reached = outcome
                break
        assert reached is not None, f"transition {t} has no concrete outcome"
        config = reached
    return _signed(block_start(config) - begin, graph.n)


def find_progressing_rule_cycles(
    catalog: AppendixRuleCatalog = APPENDIX_RULES,
    exclusions: Optional[Iterable[str]] = None,
    n: int = REFERENCE_RING_SIZE,
) -> list[CycleAnalysis]:
    """All simple cycles of the transition graph over the candidate rules without
    'exclusions', each with the displacement of one traversal. Cycles with a
    non-zero displacement carry the robots around the ring.
    """
    graph = cexp_transition_graph(catalog.select(exclusions), n)
    analyses = []
    for cycle in simple_cycles(graph):
        analysis = CycleAnalysis(
            rules=frozenset(t.rule for t in cycle),
            transition_sequence=tuple((t.source, t.rule) for t in cycle),
            displacement=cycle_displacement(graph, cycle),
        )
        analyses.append(analysis)
        logger.debug("%s", analysis)
    logger.info(
        "%d simple cycles, %d progressing", len(analyses), sum(1 for analysis in analyses if analysis.progressing)
    )
    return analyses
