from __future__ import annotations

from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional

from ..algorithms.config_classes import CATALOG
from ..core.configuration import Configuration
from ..semantics.scheduler import SchedulerModel
from .territory import TerritorySet, find_independent_territory_set
from .verdict import Objective


class CertificateKind(Enum):
    TERRITORY = "territory"
    PAIR_SAME_COLOR = "pair-same-color"
    SAME_COLOR_TOWER = "same-color-tower"
    DISTANCE_CLASS = "distance-class"
    TOWER_DISTANCE_2 = "tower-distance-2"
    SYMMETRIC_XYX = "symmetric-xyx"
    SYMMETRIC_CLASS = "symmetric-class"


@dataclass(frozen=True)
class Certificate:
    """A structural reason why no algorithm explores the ring from a configuration."""

    kind: CertificateKind
    detail: str
    territories: Optional[TerritorySet] = None

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.detail}"


def _longest_distance(config: Configuration) -> int:
    occupied = sorted(config.occupied)
    return max((config.distance(u, v) for u, v in combinations(occupied, 2)), default=0)


def _territory(config: Configuration) -> Optional[Certificate]:
    if any(config[v].is_tower for v in config.occupied):
        return None
    territories = find_independent_territory_set(config)
    if territories is None:
        return None
    return Certificate(CertificateKind.TERRITORY, str(territories), territories)


def _tower_territory(config: Configuration) -> Optional[Certificate]:
    if not any(config[v].is_tower for v in config.occupied):
        return None
    territories = find_independent_territory_set(config)
    if territories is None:
        return None
    return Certificate(CertificateKind.TERRITORY, f"monochrome towers, {territories}", territories)


def _pair_same_color(config: Configuration) -> Optional[Certificate]:
    occupied = sorted(config.occupied)
    if len(occupied) != 2 or config.distance(*occupied) != 1:
        return None
    first, second = (config[v] for v in occupied)
    if len(first) == len(second) == 1 and first == second:
        return Certificate(CertificateKind.PAIR_SAME_COLOR, f"adjacent {first!r}{second!r}")
    return None


def _same_color_tower(config: Configuration) -> Optional[Certificate]:
    for v in sorted(config.occupied):
        color, count = Counter(config[v]).most_common(1)[0]
        if count >= 2:
            return Certificate(CertificateKind.SAME_COLOR_TOWER, f"{count} robots of color {color} on v{v}")
    return None


def _distance_class(config: Configuration) -> Optional[Certificate]:
    longest = _longest_distance(config)
    if longest >= 3:
        return Certificate(CertificateKind.DISTANCE_CLASS, f"longest distance {longest}")
    return None


def _tower_distance_2(config: Configuration) -> Optional[Certificate]:
    occupied = sorted(config.occupied)
    if len(occupied) == 2 and config.distance(*occupied) == 2 and any(len(config[v]) == 2 for v in occupied):
        return Certificate(CertificateKind.TOWER_DISTANCE_2, "tower and single robot at distance 2")
    return None


def _symmetric_xyx(config: Configuration) -> Optional[Certificate]:
    occupied = config.occupied
    if len(occupied) != 3 or any(len(config[v]) != 1 for v in occupied):
        return None
    for v in sorted(occupied):
        if (v - 1) % config.n in occupied and (v + 1) % config.n in occupied and config[v - 1] == config[v + 1]:
            return Certificate(
                CertificateKind.SYMMETRIC_XYX, f"{config[v - 1]!r}{config[v]!r}{config[v + 1]!r} centered on v{v}"
            )
    return None


def _symmetric_class(config: Configuration) -> Optional[Certificate]:
    if CATALOG.contains("C_sym", config):
        return Certificate(CertificateKind.SYMMETRIC_CLASS, f"{config.canonical[0]} is in C_sym")
    return None


ALL_MODELS = frozenset(SchedulerModel)
NON_FSYNC = frozenset((SchedulerModel.SSYNC, SchedulerModel.ASYNC))


@dataclass(frozen=True)
class CertificateRule:
    """A checker with the scope its impossibility argument covers."""

    kind: CertificateKind
    check: Callable[[Configuration], Optional[Certificate]]
    models: frozenset[SchedulerModel]
    robot_counts: Optional[frozenset[int]] = None
    min_n: dict[int, int] = field(default_factory=dict)

    def applies(self, config: Configuration, model: SchedulerModel) -> bool:
        if model not in self.models:
            return False
        if self.robot_counts is not None and config.k not in self.robot_counts:
            return False
        return config.n >= self.min_n.get(config.k, 3)


CERTIFICATE_RULES: tuple[CertificateRule, ...] = (
    CertificateRule(CertificateKind.TERRITORY, _territory, ALL_MODELS, min_n={2: 6}),
    CertificateRule(CertificateKind.PAIR_SAME_COLOR, _pair_same_color, ALL_MODELS, frozenset({2}), {2: 6}),
    CertificateRule(CertificateKind.SAME_COLOR_TOWER, _same_color_tower, NON_FSYNC, frozenset({2, 3, 4}), {2: 6, 3: 6}),
    CertificateRule(CertificateKind.TERRITORY, _tower_territory, frozenset({SchedulerModel.FSYNC}), min_n={2: 6}),
    CertificateRule(CertificateKind.DISTANCE_CLASS, _distance_class, NON_FSYNC, frozenset({3}), {3: 9}),
    CertificateRule(CertificateKind.TOWER_DISTANCE_2, _tower_distance_2, NON_FSYNC, frozenset({3}), {3: 9}),
    CertificateRule(CertificateKind.SYMMETRIC_XYX, _symmetric_xyx, NON_FSYNC, frozenset({3}), {3: 9}),
    CertificateRule(CertificateKind.SYMMETRIC_CLASS, _symmetric_class, NON_FSYNC, frozenset({4})),
)


def classify_configuration(
    config: Configuration, model: SchedulerModel, objective: Objective = Objective.PERPETUAL
) -> Optional[Certificate]:
    """The first certificate, in fixed priority order, whose scope covers the
    configuration. The structural arguments rule out both objectives alike.
    """
    for rule in CERTIFICATE_RULES:
        if rule.applies(config, model):
            certificate = rule.check(config)
            if certificate is not None:
                return certificate
    return None


def certificate_holds(certificate: Certificate, config: Configuration) -> bool:
    "re-checks the structural predicate of 'certificate' on 'config'"
    return any(rule.check(config) is not None for rule in CERTIFICATE_RULES if rule.kind is certificate.kind)
