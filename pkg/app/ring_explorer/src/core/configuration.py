from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from typing import Optional, cast

from ..exceptions import ConfigurationError
from .color import DEFAULT_PALETTE, Color, Palette
from .node_content import NodeContent
from .transform import Transform
from .view import View

logger = logging.getLogger(__name__)

NodeKey = tuple
EMPTY_KEY: NodeKey = (1,)


class Configuration:
    """A ring of n >= 3 nodes, each holding a (possibly empty) multiset of colors."""

    def __init__(self, nodes: Iterable[Iterable[Color]], palette: Palette = DEFAULT_PALETTE) -> None:
        self.nodes: tuple[NodeContent, ...] = tuple(NodeContent(m) for m in nodes)
        self.palette = palette
        self.n = len(self.nodes)
        if self.n < 3:
            if self.n == 2:
                logger.warning("rings of 2 nodes have coinciding neighbors and are not supported")
            raise ConfigurationError(f"a ring needs at least 3 nodes, got {self.n}")
        for m in self.nodes:
            for c in m:
                if c not in palette:
                    raise ConfigurationError(f"unknown color {c!r}, palette is {palette}")
        self.k = sum(len(m) for m in self.nodes)
        if self.k < 1:
            raise ConfigurationError("a configuration holds at least one robot")
        self._canonical: Optional[tuple[Configuration, Transform]] = None

    def __getitem__(self, i: int) -> NodeContent:
        return self.nodes[i % self.n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.nodes == other.nodes and self.palette == other.palette

    def __hash__(self) -> int:
        return hash((self.nodes, self.palette))

    def __repr__(self) -> str:
        return f"Configuration({self.format()!r})"

    def __str__(self) -> str:
        return self.format()

    @property
    def occupied(self) -> frozenset[int]:
        return frozenset(i for i, m in enumerate(self.nodes) if m)

    def distance(self, i: int, j: int) -> int:
        d = (i - j) % self.n
        return min(d, self.n - d)

    def node_key(self, m: NodeContent) -> NodeKey:
        if not m:
            return EMPTY_KEY
        return (0, tuple(sorted(self.palette.rank(c) for c in m)))

    def key(self) -> tuple[NodeKey, ...]:
        return tuple(self.node_key(m) for m in self.nodes)

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None, palette: Palette = DEFAULT_PALETTE) -> Configuration:
        """Reads comma-separated node entries: '.' is an empty node, '.^h' stands
        for h empty nodes and a string of palette letters is a (tower) multiset.
        Trailing nodes up to 'n' are empty.
        """
        nodes: list[NodeContent] = []
        for raw in text.split(","):
            entry = raw.strip()
            if entry == ".":
                nodes.append(NodeContent())
            elif entry.startswith(".^"):
                try:
                    h = int(entry[2:])
                except ValueError:
                    raise ConfigurationError(f"malformed shorthand {entry!r}") from None
                if h < 1:
                    raise ConfigurationError(f"shorthand {entry!r} must expand to at least one node")
                nodes.extend(NodeContent() for _ in range(h))
            elif entry and entry.isalpha():
                for c in entry:
                    if c not in palette:
                        raise ConfigurationError(f"unknown color letter {c!r} in {text!r}, palette is {palette}")
                nodes.append(NodeContent(entry))
            else:
                raise ConfigurationError(f"malformed node entry {entry!r} in {text!r}")
        if n is not None:
            if n < len(nodes):
                raise ConfigurationError(f"{text!r} lists {len(nodes)} nodes but the ring has only {n}")
            nodes.extend(NodeContent() for _ in range(n - len(nodes)))
        return cls(nodes, palette=palette)

    def format(self) -> str:
        return ",".join("".join(self.palette.sort(m)) if m else "." for m in self.nodes)

    def render(self) -> str:
        """Cells separated by blanks, towers as stacked letters in one cell."""
        width = max(1, *(len(m) for m in self.nodes))
        cells = (("".join(self.palette.sort(m)) if m else ".").ljust(width) for m in self.nodes)
        return " ".join(cells).rstrip()

    def transform(self, t: Transform) -> Configuration:
        assert t.n == self.n, "transform acts on a ring of another size"
        mapping = t.color_map
        if mapping:
            self.palette.check_permutation(mapping)
        nodes: list[NodeContent] = [NodeContent()] * self.n
        for i, m in enumerate(self.nodes):
            nodes[t.map_node(i)] = m.recolor(mapping)
        return Configuration(nodes, palette=self.palette)

    def rotate(self, s: int) -> Configuration:
        return self.transform(Transform.rotation(self.n, s))

    def reflect(self, axis: int = 0) -> Configuration:
        return self.transform(Transform.reflection(self.n, axis))

    def color_swap(self, mapping: Optional[Mapping[Color, Color]] = None) -> Configuration:
        return self.transform(Transform.color_swap(self.n, mapping if mapping is not None else self.palette.swap()))

    @property
    def canonical(self) -> tuple[Configuration, Transform]:
        if self._canonical is None:
            self.set_canonical()
        return cast(tuple[Configuration, Transform], self._canonical)

    def set_canonical(self) -> None:
        best_key: Optional[tuple[NodeKey, ...]] = None
        best_t = Transform.identity(self.n)
        for t in Transform.dihedral(self.n):
            keys: list[NodeKey] = [EMPTY_KEY] * self.n
            for i, m in enumerate(self.nodes):
                keys[t.map_node(i)] = self.node_key(m)
            candidate = tuple(keys)
            if best_key is None or candidate < best_key:
                best_key, best_t = candidate, t
        self._canonical = (self.transform(best_t), best_t)

    def robot_views(self, node: int, self_color: Color) -> tuple[View, View]:
        center = self[node]
        if self_color not in center:
            raise ConfigurationError(f"no robot of color {self_color} at node {node % self.n} of {self}")
        forward = View(self_color=self_color, left=self[node - 1], center=center, right=self[node + 1])
        return forward, forward.mirrored()


def parse_configuration(text: str, n: Optional[int] = None, palette: Palette = DEFAULT_PALETTE) -> Configuration:
    return Configuration.parse(text, n=n, palette=palette)


def format_configuration(config: Configuration) -> str:
    return config.format()


def transform_configuration(config: Configuration, t: Transform) -> Configuration:
    return config.transform(t)


def canonicalize(config: Configuration) -> tuple[Configuration, Transform]:
    return config.canonical


def robot_views(config: Configuration, node: int, self_color: Color) -> tuple[View, View]:
    return config.robot_views(node, self_color)
