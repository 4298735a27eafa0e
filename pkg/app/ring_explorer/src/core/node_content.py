from __future__ import annotations

from collections.abc import Iterable, Mapping

from .color import Color


class NodeContent(tuple):
    """The multiset of colors of the robots on one node, stored sorted.
    Robots of equal color on a node are indistinguishable.
    """

    def __new__(cls, colors: Iterable[Color] = ()) -> NodeContent:
        return super(NodeContent, cls).__new__(cls, sorted(colors))

    @property
    def is_empty(self) -> bool:
        return len(self) == 0

    @property
    def is_tower(self) -> bool:
        return len(self) >= 2

    @property
    def is_monochrome(self) -> bool:
        return len(set(self)) <= 1

    def with_color(self, color: Color) -> NodeContent:
        return NodeContent((*self, color))

    def without(self, color: Color) -> NodeContent:
        assert color in self, f"no robot of color {color} in {self!r}"
        colors = list(self)
        colors.remove(color)
        return NodeContent(colors)

    def recolor(self, mapping: Mapping[Color, Color]) -> NodeContent:
        return NodeContent(mapping.get(c, c) for c in self)

    def __repr__(self) -> str:
        return "".join(self) if self else "."


EMPTY = NodeContent()
