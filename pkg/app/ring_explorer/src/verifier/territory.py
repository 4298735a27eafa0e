from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional

from ..core.configuration import Configuration


@dataclass(frozen=True)
class TerritorySet:
    """Pairs {v, v±1} of adjacent nodes, one per occupied node, pairwise at
    distance at least 2. Robots confined to their territories never meet.
    """

    n: int
    territories: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for a, b in self.territories:
            assert _distance(self.n, a, b) == 1, f"territory {{{a},{b}}} is not a pair of adjacent nodes"
        for first, second in combinations(self.territories, 2):
            assert min(_distance(self.n, u, v) for u in first for v in second) >= 2, "territories are too close"

    def nodes(self) -> frozenset[int]:
        return frozenset(v for pair in self.territories for v in pair)

    def __str__(self) -> str:
        return ", ".join("{" + ",".join(f"v{v}" for v in sorted(pair)) + "}" for pair in self.territories)


def _distance(n: int, i: int, j: int) -> int:
    d = (i - j) % n
    return min(d, n - d)


def find_independent_territory_set(config: Configuration) -> Optional[TerritorySet]:
    """Exhaustive over the orientations of the occupied nodes; requires every
    occupied node to be monochrome and no two occupied nodes to be adjacent.
    """
    occupied = sorted(config.occupied)
    if not all(config[v].is_monochrome for v in occupied):
        return None
    if any(config.distance(u, v) == 1 for u, v in combinations(occupied, 2)):
        return None
    n = config.n
    for orientation in product((1, -1), repeat=len(occupied)):
        pairs = [(v, (v + d) % n) for v, d in zip(occupied, orientation)]
        if all(min(config.distance(u, v) for u in p for v in q) >= 2 for p, q in combinations(pairs, 2)):
            return TerritorySet(n=n, territories=tuple(pairs))
    return None
