from __future__ import annotations

from ..core.configuration import Configuration
from ..exceptions import ConfigurationError

CONFIG_CLASSES: dict[str, tuple[str, ...]] = {
    # three robots that keep exploring once formed
    "C_pe": ("W,W,G", "W,GW", "GW,G"),
    # sub-configurations three exploring robots move through
    "C_exp": ("W,G,G", "G,G,W", "G,W,W", "W,W,G", "W,GW", "GW,W", "G,GW", "GW,G"),
    # symmetric about a link; the adversary keeps them symmetric
    "C_sym": ("W,G,G,W", "G,W,W,G", "W,W,W,W", "G,G,G,G", "WW,WW", "GG,GG", "GW,GW"),
    # solvable four-robot initials of terminating exploration
    "C_sol": (
        "W,W,G,G",
        "W,W,W,G",
        "W,W,G,W",
        "G,G,W,W",
        "G,W,W,W",
        "W,G,W,W",
        "G,G,G,W",
        "G,G,W,G",
        "W,G,G,G",
        "G,W,G,G",
    ),
}


class ConfigClassCatalog:
    """Named sets of sub-configurations, compared up to rotation and reflection."""

    def __init__(self, classes: dict[str, tuple[str, ...]] = CONFIG_CLASSES) -> None:
        self.classes = classes
        self._cache: dict[tuple[str, int], frozenset[tuple]] = {}

    def names(self) -> list[str]:
        return list(self.classes)

    def patterns(self, name: str) -> tuple[str, ...]:
        try:
            return self.classes[name]
        except KeyError:
            raise ConfigurationError(f"unknown configuration class {name!r}, known are {', '.join(self.classes)}") from None

    def members(self, name: str, n: int) -> list[Configuration]:
        "the members that fit on an n-ring"
        return [Configuration.parse(text, n=n) for text in self.patterns(name) if text.count(",") < n]

    def canonical_keys(self, name: str, n: int) -> frozenset[tuple]:
        try:
            return self._cache[(name, n)]
        except KeyError:
            self._cache[(name, n)] = frozenset(c.canonical[0].key() for c in self.members(name, n))
            return self._cache[(name, n)]

    def contains(self, name: str, config: Configuration) -> bool:
        "the whole configuration is a member up to rotation and reflection"
        return config.canonical[0].key() in self.canonical_keys(name, config.n)


CATALOG = ConfigClassCatalog()
