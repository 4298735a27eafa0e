from __future__ import annotations

import logging
from collections.abc import Iterator
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product

import sympy

from ..core.color import DEFAULT_PALETTE, Palette
from ..core.configuration import Configuration
from ..core.transform import Transform
from ..exceptions import ConfigurationError

logger = logging.getLogger(__name__)


def _is_connected(occupied: frozenset[int], n: int) -> bool:
    "occupied nodes form a single arc of the ring"
    if len(occupied) == n:
        return True
    starts = [v for v in occupied if (v - 1) % n not in occupied]
    return len(starts) == 1


def _placements(n: int, k: int, palette: Palette, allow_towers: bool) -> Iterator[list[list[str]]]:
    if allow_towers:
        slots = [(v, c) for v in range(n) for c in palette]
        for chosen in combinations_with_replacement(slots, k):
            nodes: list[list[str]] = [[] for _ in range(n)]
            for v, c in chosen:
                nodes[v].append(c)
            yield nodes
    else:
        for occupied in combinations(range(n), k):
            for colors in product(palette, repeat=k):
                nodes = [[] for _ in range(n)]
                for v, c in zip(occupied, colors):
                    nodes[v].append(c)
                yield nodes


def enumerate_initial_configurations(
    n: int,
    k: int,
    palette: Palette = DEFAULT_PALETTE,
    allow_towers: bool = True,
    connected: bool = False,
) -> list[Configuration]:
    """One canonical representative per class of placements of k colored robots
    on n nodes, sorted by canonical key.

    :param allow_towers: admit nodes holding several robots
    :param connected: keep only placements whose occupied nodes form one arc
    """
    if n < 3 or k < 1:
        raise ConfigurationError(f"need a ring of at least 3 nodes and at least one robot, got n={n}, k={k}")
    classes: dict[tuple, Configuration] = {}
    for nodes in _placements(n, k, palette, allow_towers):
        config = Configuration(nodes, palette=palette)
        if connected and not _is_connected(config.occupied, n):
            continue
        canonical = config.canonical[0]
        classes.setdefault(canonical.key(), canonical)
    logger.debug("n=%d k=%d: %d classes", n, k, len(classes))
    return [classes[key] for key in sorted(classes)]


def _cycle_lengths(t: Transform) -> list[int]:
    lengths = []
    seen: set[int] = set()
    for start in range(t.n):
        if start in seen:
            continue
        length, v = 0, start
        while v not in seen:
            seen.add(v)
            v = t.map_node(v)
            length += 1
        lengths.append(length)
    return lengths


@lru_cache(maxsize=None)
def count_configuration_classes(n: int, k: int, palette_size: int, allow_towers: bool = True) -> int:
    """Number of placements of k robots with 'palette_size' colors on an n-ring up to
    rotation and reflection, by Burnside's lemma. A transform fixes a placement iff
    every node cycle carries the same multiset, so each cycle of length L contributes
    the factor 1/(1-x^L)^palette_size (1 + palette_size*x^L without towers) and the
    fixed placements are the coefficient of x^k in their product.
    """
    x = sympy.Symbol("x")
    total = sympy.Integer(0)
    for t in Transform.dihedral(n):
        series = sympy.Integer(1)
        for length in _cycle_lengths(t):
            if allow_towers:
                series *= (1 - x**length) ** (-palette_size)
            else:
                series *= 1 + palette_size * x**length
        expansion = sympy.series(series, x, 0, k + 1).removeO()
        total += sympy.expand(expansion).coeff(x, k)
    count = sympy.Rational(total, 2 * n)
    assert count.is_integer, f"orbit count {count} is not an integer"
    return int(count)
