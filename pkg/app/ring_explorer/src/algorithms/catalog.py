from __future__ import annotations

import logging
from pathlib import Path

from ..core.algorithm import Algorithm
from ..exceptions import ConfigurationError, RuleError

logger = logging.getLogger(__name__)

FP2 = """\
# perpetual exploration, two robots, FSYNC
@name FP2
@palette GW
@initial G,W
@initial W,G
0GW : . | (G) | W :: G, left
0WG : . | (W) | G :: W, right
"""

FT3 = """\
# terminating exploration, three robots, FSYNC
@name FT3
@palette GW
@initial W,W,W
@initial G,W,W
@initial W,W,G
@initial G,W,G
0GW : . | (G) | W :: G, left
0WG : . | (W) | G :: W, right
0WW : . | (W) | W :: G, stay
GWW : G | (W) | W :: W, left
GWG : G | (W) | G :: W, either
"""

AP3 = """\
# perpetual exploration, three robots, ASYNC
@name AP3
@palette GW
@initial W,W,G
@initial W,G,G
@initial G,W,W
@initial G,G,W
@initial W,GW
@initial GW,W
@initial G,GW
@initial GW,G
0GW : . | (G) | W :: G, right
0TW : . | G(W) | W :: G, right
0TG : . | W(G) | G :: W, left
0WG : . | (W) | G :: W, right
"""

AT4 = """\
# terminating exploration, four robots, ASYNC
@name AT4
@palette GW
@initial W,W,G,G
@initial W,W,W,G
@initial W,W,G,W
@initial G,G,W,W
@initial G,W,W,W
@initial W,G,W,W
0GW : . | (G) | W :: G, right
0TW : . | G(W) | W :: G, right
0TG : . | W(G) | G :: W, left
0WG : . | (W) | G :: W, right
GGW : G | (G) | W :: G, right
GTW : G | G(W) | W :: G, right
"""

BUILTIN_SOURCES: dict[str, str] = {"FP2": FP2, "FT3": FT3, "AP3": AP3, "AT4": AT4}
BUILTIN_NAMES: tuple[str, ...] = tuple(BUILTIN_SOURCES)


class AlgorithmCatalog:
    """Rule tables by name, read once from their rule-file text."""

    def __init__(self, sources: dict[str, str] = BUILTIN_SOURCES) -> None:
        self.sources = sources
        self._entries: dict[str, Algorithm] = {}

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.sources)

    def __contains__(self, name: object) -> bool:
        return isinstance(name, str) and name.upper() in self.sources

    def get(self, name: str) -> Algorithm:
        key = name.upper()
        if key not in self.sources:
            raise RuleError(f"unknown algorithm {name!r}, built-ins are {', '.join(self.names)}")
        if key not in self._entries:
            self._entries[key] = Algorithm.from_text(self.sources[key])
        return self._entries[key]


ALGORITHMS = AlgorithmCatalog()


def builtin_algorithm(name: str) -> Algorithm:
    return ALGORITHMS.get(name)


def color_swapped(algorithm: Algorithm) -> Algorithm:
    """The algorithm with the two colors exchanged in guards, actions and initial configurations."""
    try:
        return algorithm.color_swapped()
    except ConfigurationError as error:
        raise RuleError(f"cannot swap the colors of {algorithm.name}: {error}") from error


def export_algorithm(name: str) -> str:
    "the built-in in rule-file format"
    return builtin_algorithm(name).to_text()


def load_algorithm(reference: str) -> Algorithm:
    """A built-in by name, or else a rule file by path."""
    if reference in ALGORITHMS:
        return builtin_algorithm(reference)
    path = Path(reference)
    if not path.is_file():
        raise RuleError(f"{reference!r} is neither a built-in ({', '.join(BUILTIN_NAMES)}) nor a rule file")
    logger.debug("reading rule file %s", path)
    return Algorithm.from_text(path.read_text(encoding="utf-8"), name=None)
