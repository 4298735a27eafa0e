from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .color import Color


@dataclass(frozen=True)
class Transform:
    """A symmetry of the n-ring, optionally combined with a color permutation.
    Node i is sent to (-i if reflect else i) + shift modulo n.
    """

    n: int
    shift: int = 0
    reflect: bool = False
    colors: tuple[tuple[Color, Color], ...] = ()

    def __post_init__(self) -> None:
        assert self.n >= 3, "transforms act on rings with at least 3 nodes"
        object.__setattr__(self, "shift", self.shift % self.n)
        object.__setattr__(self, "colors", tuple(sorted((a, b) for a, b in self.colors if a != b)))

    @classmethod
    def identity(cls, n: int) -> Transform:
        return cls(n)

    @classmethod
    def rotation(cls, n: int, s: int) -> Transform:
        return cls(n, shift=s)

    @classmethod
    def reflection(cls, n: int, axis: int = 0) -> Transform:
        "reflection fixing node 'axis'"
        return cls(n, shift=2 * axis, reflect=True)

    @classmethod
    def color_swap(cls, n: int, mapping: Mapping[Color, Color]) -> Transform:
        return cls(n, colors=tuple(mapping.items()))

    @classmethod
    def dihedral(cls, n: int) -> list[Transform]:
        """All 2n rotations and reflections, identity first."""
        return [cls(n, shift=s, reflect=r) for r in (False, True) for s in range(n)]

    @property
    def color_map(self) -> dict[Color, Color]:
        return dict(self.colors)

    @property
    def is_geometric(self) -> bool:
        return not self.colors

    def map_node(self, i: int) -> int:
        return ((-i if self.reflect else i) + self.shift) % self.n

    def map_direction(self, direction: int) -> int:
        return -direction if self.reflect else direction

    def map_color(self, color: Color) -> Color:
        for a, b in self.colors:
            if a == color:
                return b
        return color

    def compose(self, other: Transform) -> Transform:
        """'self' after 'other'"""
        assert self.n == other.n, "transforms act on different rings"
        colors = {c: self.map_color(other.map_color(c)) for c in {*self.color_map, *other.color_map}}
        return Transform(
            self.n,
            shift=self.map_direction(other.shift) + self.shift,
            reflect=self.reflect != other.reflect,
            colors=tuple(colors.items()),
        )

    def inverse(self) -> Transform:
        inverse_colors = tuple((b, a) for a, b in self.colors)
        if self.reflect:
            return Transform(self.n, shift=self.shift, reflect=True, colors=inverse_colors)
        return Transform(self.n, shift=-self.shift, colors=inverse_colors)

    def __matmul__(self, other: Transform) -> Transform:
        return self.compose(other)

    def __repr__(self) -> str:
        parts = [f"reflect+{self.shift}" if self.reflect else f"rotate+{self.shift}"]
        if self.colors:
            parts.append(",".join(f"{a}->{b}" for a, b in self.colors))
        return f"Transform({'; '.join(parts)})"

