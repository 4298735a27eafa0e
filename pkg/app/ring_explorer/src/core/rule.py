from __future__ import annotations

import re
from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum

from ..exceptions import RuleError
from .color import Color
from .node_content import NodeContent
from .view import View


class Movement(Enum):
    STAY = "stay"
    TOWARD_MINUS = "left"
    TOWARD_PLUS = "right"
    EITHER = "either"

    @property
    def symbol(self) -> str:
        return _MOVEMENT_SYMBOLS[self]

    @property
    def is_directional(self) -> bool:
        return self in (Movement.TOWARD_MINUS, Movement.TOWARD_PLUS)

    def mirrored(self) -> Movement:
        if self is Movement.TOWARD_MINUS:
            return Movement.TOWARD_PLUS
        if self is Movement.TOWARD_PLUS:
            return Movement.TOWARD_MINUS
        return self

    @classmethod
    def parse(cls, text: str) -> Movement:
        token = text.strip()
        for movement in cls:
            if token.lower() == movement.value or token == movement.symbol:
                return movement
        raise RuleError(f"unknown movement {text!r}")


_MOVEMENT_SYMBOLS = {
    Movement.STAY: "⊥",
    Movement.TOWARD_MINUS: "←",
    Movement.TOWARD_PLUS: "→",
    Movement.EITHER: "←∨→",
}


class Orientation(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True, order=True)
class Decision:
    """The outcome of one Compute phase: the new light and the absolute
    direction of the move (-1, +1, or 0 for staying).
    """

    new_color: Color
    direction: int

    def __post_init__(self) -> None:
        assert self.direction in (-1, 0, 1), "a robot moves at most one edge"

    @property
    def stays(self) -> bool:
        return self.direction == 0

    def __str__(self) -> str:
        return self.new_color + {-1: "-", 0: ".", 1: "+"}[self.direction]

    @classmethod
    def parse(cls, text: str) -> Decision:
        token = text.strip()
        if len(token) != 2 or token[1] not in "-.+" or not token[0].isalpha():
            raise RuleError(f"malformed decision {text!r}, expected a color letter followed by -, . or +")
        return cls(new_color=token[0], direction={"-": -1, ".": 0, "+": 1}[token[1]])


@dataclass(frozen=True)
class Guard:
    self_color: Color
    m_minus: NodeContent
    m_zero: NodeContent
    m_plus: NodeContent

    def __post_init__(self) -> None:
        assert self.self_color in self.m_zero, "the guard's own color must be part of m_zero"

    @property
    def is_symmetric(self) -> bool:
        return self.m_minus == self.m_plus

    def matches(self, view: View) -> bool:
        return (
            self.self_color == view.self_color
            and self.m_zero == view.center
            and self.m_minus == view.left
            and self.m_plus == view.right
        )

    def as_view(self) -> View:
        return View(self_color=self.self_color, left=self.m_minus, center=self.m_zero, right=self.m_plus)

    def mirrored(self) -> Guard:
        return Guard(self_color=self.self_color, m_minus=self.m_plus, m_zero=self.m_zero, m_plus=self.m_minus)

    def colors(self) -> set[Color]:
        return {self.self_color, *self.m_minus, *self.m_zero, *self.m_plus}

    def recolor(self, mapping: Mapping[Color, Color]) -> Guard:
        return Guard(
            self_color=mapping.get(self.self_color, self.self_color),
            m_minus=self.m_minus.recolor(mapping),
            m_zero=self.m_zero.recolor(mapping),
            m_plus=self.m_plus.recolor(mapping),
        )

    def __str__(self) -> str:
        others = self.m_zero.without(self.self_color)
        center = "".join(others) + f"({self.self_color})"
        return f"{self.m_minus!r} | {center} | {self.m_plus!r}"


@dataclass(frozen=True)
class Action:
    new_color: Color
    movement: Movement

    def __str__(self) -> str:
        return f"{self.new_color}, {self.movement.value}"


@dataclass(frozen=True)
class Rule:
    """A guarded command <label> : <guard> :: <action>.
    Symmetric guards with a directional movement are representable;
    Algorithm.validate reports them.
    """

    label: str
    guard: Guard
    action: Action

    def decisions(self, orientation: Orientation) -> frozenset[Decision]:
        """Absolute decisions when the rule matched the view in the given orientation.
        'toward minus' points at the node the guard reads as m_minus, which is
        node i-1 for the forward view and node i+1 for the backward view.
        """
        sign = 1 if orientation is Orientation.FORWARD else -1
        movement = self.action.movement
        if movement is Movement.STAY:
            directions: tuple[int, ...] = (0,)
        elif movement is Movement.TOWARD_MINUS:
            directions = (-sign,)
        elif movement is Movement.TOWARD_PLUS:
            directions = (sign,)
        else:
            directions = (-1, 1)
        return frozenset(Decision(self.action.new_color, d) for d in directions)

    def colors(self) -> set[Color]:
        return self.guard.colors() | {self.action.new_color}

    def recolor(self, mapping: Mapping[Color, Color]) -> Rule:
        return Rule(
            label=self.label,
            guard=self.guard.recolor(mapping),
            action=Action(mapping.get(self.action.new_color, self.action.new_color), self.action.movement),
        )

    def __str__(self) -> str:
        return f"{self.label} : {self.guard} :: {self.action}"

    @classmethod
    def parse(cls, line: str) -> Rule:
        """Parses 'LABEL : M-1 | M0 | M+1 :: COLOR, MOVE' where the own color is
        parenthesized inside M0, e.g. '0TW : . | G(W) | W :: G, right'.
        """
        if "::" not in line:
            raise RuleError(f"rule {line!r} has no '::' separating guard and action")
        head, action_text = line.split("::", 1)
        if ":" not in head:
            raise RuleError(f"rule {line!r} has no ':' after its label")
        label, guard_text = (part.strip() for part in head.split(":", 1))
        if not label:
            raise RuleError(f"rule {line!r} has an empty label")
        parts = guard_text.split("|")
        if len(parts) != 3:
            raise RuleError(f"guard {guard_text.strip()!r} must have three '|'-separated node entries")
        match = _CENTER.match(parts[1].strip())
        if match is None:
            raise RuleError(f"center entry {parts[1].strip()!r} must parenthesize exactly one own color")
        self_color = match.group(2)
        guard = Guard(
            self_color=self_color,
            m_minus=_node_entry(parts[0]),
            m_zero=NodeContent(match.group(1) + self_color + match.group(3)),
            m_plus=_node_entry(parts[2]),
        )
        action_parts = action_text.split(",")
        if len(action_parts) != 2 or len(action_parts[0].strip()) != 1:
            raise RuleError(f"action {action_text.strip()!r} must read 'COLOR, MOVE'")
        action = Action(new_color=action_parts[0].strip(), movement=Movement.parse(action_parts[1]))
        return cls(label=label, guard=guard, action=action)


_CENTER = re.compile(r"^([A-Za-z]*)\(([A-Za-z])\)([A-Za-z]*)$")


def _node_entry(text: str) -> NodeContent:
    token = text.strip()
    if token in (".", "∅"):
        return NodeContent()
    if not token.isalpha():
        raise RuleError(f"malformed node entry {text.strip()!r}")
    return NodeContent(token)


@dataclass(frozen=True)
class Match:
    rule: Rule
    orientation: Orientation


@dataclass(frozen=True)
class MatchResult:
    """NotEnabled when 'matches' is empty, Enabled otherwise.
    A symmetric view that matches a rule does so in both orientations.
    """

    matches: tuple[Match, ...] = ()

    @property
    def enabled(self) -> bool:
        return bool(self.matches)

    @property
    def rules(self) -> tuple[Rule, ...]:
        seen: dict[str, Rule] = {}
        for m in self.matches:
            seen.setdefault(m.rule.label, m.rule)
        return tuple(seen.values())

    def orientations(self, label: str) -> frozenset[Orientation]:
        return frozenset(m.orientation for m in self.matches if m.rule.label == label)

    def decisions(self) -> frozenset[Decision]:
        result: frozenset[Decision] = frozenset()
        for m in self.matches:
            result |= m.rule.decisions(m.orientation)
        return result
