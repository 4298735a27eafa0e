from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .color import Color
from .node_content import NodeContent


@dataclass(frozen=True)
class View:
    """What a robot sees with visibility one: its own color and the multisets
    on its node (itself included) and on both neighbors.
    """

    self_color: Color
    left: NodeContent
    center: NodeContent
    right: NodeContent

    def __post_init__(self) -> None:
        assert self.self_color in self.center, "the observing robot must be part of the center multiset"

    @property
    def is_symmetric(self) -> bool:
        return self.left == self.right

    def mirrored(self) -> View:
        return View(self_color=self.self_color, left=self.right, center=self.center, right=self.left)

    def recolor(self, mapping: Mapping[Color, Color]) -> View:
        return View(
            self_color=mapping.get(self.self_color, self.self_color),
            left=self.left.recolor(mapping),
            center=self.center.recolor(mapping),
            right=self.right.recolor(mapping),
        )

    def __repr__(self) -> str:
        return f"({self.self_color}; {self.left!r}, {self.center!r}, {self.right!r})"
