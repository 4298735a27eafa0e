from __future__ import annotations

from collections.abc import Iterable, Mapping

from ..exceptions import ConfigurationError

Color = str


class Palette(tuple):
    """An ordered, duplicate-free tuple of single-letter colors.
    The order fixes tie-breaks of canonical forms: earlier colors sort first.
    """

    def __new__(cls, *args) -> Palette:
        if len(args) == 1 and not isinstance(args[0], str):
            colors = tuple(args[0])
        elif len(args) == 1 and len(args[0]) > 1:
            colors = tuple(args[0])
        else:
            colors = tuple(args)
        if not colors:
            raise ConfigurationError("palette must not be empty")
        if len(set(colors)) != len(colors):
            raise ConfigurationError(f"palette {''.join(colors)} has duplicate colors")
        for c in colors:
            if not (isinstance(c, str) and len(c) == 1 and c.isalpha()):
                raise ConfigurationError(f"color {c!r} must be a single letter")
        return super(Palette, cls).__new__(cls, colors)

    def rank(self, color: Color) -> int:
        try:
            return self.index(color)
        except ValueError:
            raise ConfigurationError(f"unknown color {color!r}, palette is {self}") from None

    def sort(self, colors: Iterable[Color]) -> tuple[Color, ...]:
        return tuple(sorted(colors, key=self.rank))

    def check_permutation(self, mapping: Mapping[Color, Color]) -> None:
        keys, values = set(mapping), set(mapping.values())
        if keys != values or not keys <= set(self):
            raise ConfigurationError(f"color permutation {dict(mapping)} is not over palette {self}")

    def swap(self) -> dict[Color, Color]:
        """The involution exchanging the two colors of a binary palette."""
        if len(self) != 2:
            raise ConfigurationError(f"color swap needs a binary palette, got {self}")
        first, second = self
        return {first: second, second: first}

    def __str__(self) -> str:
        return "".join(self)

    def __repr__(self) -> str:
        return f"Palette({''.join(self)})"


DEFAULT_PALETTE = Palette("G", "W")
