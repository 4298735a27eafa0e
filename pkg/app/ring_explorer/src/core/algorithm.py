from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..exceptions import ConfigurationError, RuleError
from .color import DEFAULT_PALETTE, Palette
from .configuration import Configuration
from .rule import Decision, Match, MatchResult, Orientation, Rule
from .view import View

logger = logging.getLogger(__name__)


class IssueKind(Enum):
    SYMMETRIC_DIRECTIONAL = "symmetric guard with directional movement"
    CONFLICTING_GUARDS = "guards match the same view with different actions"
    FOREIGN_COLOR = "color outside the palette"
    DUPLICATE_LABEL = "duplicate rule label"
    BAD_INITIAL = "unparseable initial configuration"


@dataclass(frozen=True)
class Issue:
    kind: IssueKind
    labels: tuple[str, ...]
    detail: str = ""

    def __str__(self) -> str:
        labels = ", ".join(self.labels)
        suffix = f": {self.detail}" if self.detail else ""
        return f"{self.kind.value} [{labels}]{suffix}"


class Algorithm:
    """A named table of rules over a palette, with its declared initial
    sub-configurations in configuration text (e.g. 'G,W' or 'W,GW').
    """

    def __init__(
        self,
        name: str,
        rules: Iterable[Rule],
        palette: Palette = DEFAULT_PALETTE,
        initial_configs: Iterable[str] = (),
    ) -> None:
        self.name = name
        self.palette = palette
        self.rules: tuple[Rule, ...] = tuple(rules)
        self.initial_configs: tuple[str, ...] = tuple(initial_configs)
        self._cache: dict[View, frozenset[Decision]] = {}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Algorithm):
            return NotImplemented
        return (self.name, self.palette, self.rules, self.initial_configs) == (
            other.name,
            other.palette,
            other.rules,
            other.initial_configs,
        )

    def __hash__(self) -> int:
        return hash((self.name, self.palette, self.rules, self.initial_configs))

    def __getstate__(self) -> dict:
        state = self.__dict__.copy()
        state["_cache"] = {}
        return state

    def __repr__(self) -> str:
        return f"Algorithm({self.name}, {len(self.rules)} rules)"

    def rule(self, label: str) -> Rule:
        for r in self.rules:
            if r.label == label:
                return r
        raise RuleError(f"{self.name} has no rule labelled {label!r}")

    def match(self, views: tuple[View, View]) -> MatchResult:
        forward, backward = views
        matches = []
        for r in self.rules:
            if r.guard.matches(forward):
                matches.append(Match(rule=r, orientation=Orientation.FORWARD))
            if r.guard.matches(backward):
                matches.append(Match(rule=r, orientation=Orientation.BACKWARD))
        return MatchResult(matches=tuple(matches))

    def decisions(self, forward: View) -> frozenset[Decision]:
        """Distinct decisions available to a robot with this forward view; empty when not enabled."""
        try:
            return self._cache[forward]
        except KeyError:
            self._cache[forward] = self.match((forward, forward.mirrored())).decisions()
            return self._cache[forward]

    def pattern(self, text: str) -> Configuration:
        "the sub-configuration on the smallest ring that holds it"
        try:
            return Configuration.parse(text, palette=self.palette)
        except ConfigurationError:
            return Configuration.parse(text, n=3, palette=self.palette)

    def initial_configurations(self, n: int) -> list[Configuration]:
        return [Configuration.parse(text, n=n, palette=self.palette) for text in self.initial_configs]

    def validate(self) -> list[Issue]:
        issues: list[Issue] = []
        seen: set[str] = set()
        for r in self.rules:
            if r.label in seen:
                issues.append(Issue(IssueKind.DUPLICATE_LABEL, (r.label,)))
            seen.add(r.label)
            foreign = sorted(r.colors() - set(self.palette))
            if foreign:
                issues.append(Issue(IssueKind.FOREIGN_COLOR, (r.label,), "".join(foreign)))
            if r.guard.is_symmetric and r.action.movement.is_directional:
                issues.append(Issue(IssueKind.SYMMETRIC_DIRECTIONAL, (r.label,), str(r.guard)))
        for i, first in enumerate(self.rules):
            witness = first.guard.as_view()
            for second in self.rules[i + 1 :]:
                one = Algorithm(self.name, [first]).match((witness, witness.mirrored()))
                two = Algorithm(self.name, [second]).match((witness, witness.mirrored()))
                if two.enabled and one.decisions() != two.decisions():
                    issues.append(Issue(IssueKind.CONFLICTING_GUARDS, (first.label, second.label), str(first.guard)))
        for text in self.initial_configs:
            try:
                self.pattern(text)
            except ConfigurationError as error:
                issues.append(Issue(IssueKind.BAD_INITIAL, (text,), str(error)))
        return issues

    def color_swapped(self) -> Algorithm:
        mapping = self.palette.swap()
        swapped_initials = []
        for text in self.initial_configs:
            swapped_initials.append("".join(mapping.get(c, c) for c in text))
        return Algorithm(
            name=f"{self.name}~swap" if not self.name.endswith("~swap") else self.name[: -len("~swap")],
            rules=[r.recolor(mapping) for r in self.rules],
            palette=self.palette,
            initial_configs=swapped_initials,
        )

    def to_text(self) -> str:
        lines = [f"@name {self.name}", f"@palette {self.palette}"]
        lines.extend(f"@initial {text}" for text in self.initial_configs)
        lines.extend(str(r) for r in self.rules)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, name: Optional[str] = None) -> Algorithm:
        """Reads a rule file: one rule per line, '#' comments, and the
        directives '@name', '@palette' and '@initial'.
        """
        rules: list[Rule] = []
        initials: list[str] = []
        palette = DEFAULT_PALETTE
        found_name = name
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                if line.startswith("@"):
                    directive, _, value = line.partition(" ")
                    value = value.strip()
                    if directive == "@name":
                        found_name = found_name or value
                    elif directive == "@palette":
                        palette = Palette(value.replace(",", ""))
                    elif directive == "@initial":
                        initials.append(value)
                    else:
                        raise RuleError(f"unknown directive {directive!r}")
                else:
                    rules.append(Rule.parse(line))
            except (RuleError, ConfigurationError) as error:
                raise RuleError(f"line {number}: {error}") from error
        if not rules:
            raise RuleError("an algorithm needs at least one rule")
        algorithm = cls(name=found_name or "custom", rules=rules, palette=palette, initial_configs=initials)
        logger.debug("read %r", algorithm)
        return algorithm


def match_rules(algorithm: Algorithm, views: tuple[View, View]) -> MatchResult:
    return algorithm.match(views)


def validate_algorithm(algorithm: Algorithm) -> list[Issue]:
    return algorithm.validate()
