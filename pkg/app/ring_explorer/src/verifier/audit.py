from __future__ import annotations

import logging
import time
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from ..core.algorithm import Algorithm
from ..core.configuration import Configuration
from ..exceptions import StateLimitExceeded
from ..semantics.scheduler import SchedulerModel, SymmetryMode
from ..settings import DEFAULT_STATE_LIMIT, worker_count
from .certificates import Certificate, classify_configuration
from .enumeration import count_configuration_classes, enumerate_initial_configurations
from .exploration import check_perpetual_exploration, check_terminating_exploration
from .verdict import Objective, Outcome

logger = logging.getLogger(__name__)


class AuditStatus(Enum):
    SOLVES = "solves"
    CERTIFIED = "certified"
    DISCREPANCY = "discrepancy"
    LIMIT_EXCEEDED = "limit-exceeded"


@dataclass(frozen=True)
class AuditEntry:
    n: int
    config: Configuration
    status: AuditStatus
    outcome: Optional[Outcome] = None
    certificate: Optional[Certificate] = None
    states: int = 0
    wall_time: float = 0.0
    reason: str = ""

    def to_record(self, timing: bool = False) -> dict:
        record = {
            "n": self.n,
            "config": self.config.format(),
            "status": self.status.value,
            "outcome": self.outcome.value if self.outcome else None,
            "certificate": self.certificate.kind.value if self.certificate else None,
            "states": self.states,
            "reason": self.reason,
        }
        if timing:
            record["wall_time"] = round(self.wall_time, 6)
        return record


@dataclass
class UniversalityReport:
    algorithm: str
    model: SchedulerModel
    objective: Objective
    k: int
    entries: list[AuditEntry] = field(default_factory=list)
    expected_classes: dict[int, int] = field(default_factory=dict)

    def with_status(self, status: AuditStatus) -> list[AuditEntry]:
        return [e for e in self.entries if e.status is status]

    @property
    def solves(self) -> list[AuditEntry]:
        return self.with_status(AuditStatus.SOLVES)

    @property
    def certified(self) -> list[AuditEntry]:
        return self.with_status(AuditStatus.CERTIFIED)

    @property
    def discrepancies(self) -> list[AuditEntry]:
        return self.with_status(AuditStatus.DISCREPANCY)

    @property
    def limit_exceeded(self) -> list[AuditEntry]:
        return self.with_status(AuditStatus.LIMIT_EXCEEDED)

    def counts(self) -> dict[str, int]:
        return {status.value: len(self.with_status(status)) for status in AuditStatus}

    @property
    def clean(self) -> bool:
        return not self.discrepancies and not self.limit_exceeded


def audit_configuration(
    config: Configuration,
    algorithm: Algorithm,
    model: SchedulerModel,
    objective: Objective,
    state_limit: int = DEFAULT_STATE_LIMIT,
    sym_mode: SymmetryMode = SymmetryMode.INDEPENDENT,
) -> AuditEntry:
    """Runs the objective's checker on one initial configuration and sets the
    verdict against the certificate catalog.
    """
    check = check_perpetual_exploration if objective is Objective.PERPETUAL else check_terminating_exploration
    started = time.perf_counter()
    try:
        verdict = check(config, algorithm, model, state_limit=state_limit, sym_mode=sym_mode)
    except StateLimitExceeded as error:
        logger.warning("%s on %s: %s", algorithm.name, config, error)
        return AuditEntry(
            config.n, config, AuditStatus.LIMIT_EXCEEDED, wall_time=time.perf_counter() - started, reason=str(error)
        )
    elapsed = time.perf_counter() - started
    certificate = classify_configuration(config, model, objective)
    if verdict.holds:
        if certificate is None:
            status, reason = AuditStatus.SOLVES, ""
        else:
            status, reason = AuditStatus.DISCREPANCY, f"verifier holds but {certificate}"
    elif certificate is not None:
        status, reason = AuditStatus.CERTIFIED, verdict.reason
    else:
        status, reason = AuditStatus.DISCREPANCY, f"verifier fails ({verdict.reason}) without a certificate"
    entry = AuditEntry(config.n, config, status, verdict.outcome, certificate, verdict.states, elapsed, reason)
    if status is AuditStatus.DISCREPANCY:
        logger.warning("discrepancy on %s (n=%d): %s", config, config.n, reason)
    else:
        logger.info("%s (n=%d): %s", config, config.n, status.value)
    return entry


def _audit_task(task: tuple) -> AuditEntry:
    return audit_configuration(*task)


def universality_audit(
    algorithm: Algorithm,
    model: SchedulerModel,
    objective: Objective,
    n_range: Iterable[int],
    k: int,
    allow_towers: bool = True,
    state_limit: int = DEFAULT_STATE_LIMIT,
    sym_mode: SymmetryMode = SymmetryMode.INDEPENDENT,
    workers: Optional[int] = None,
) -> UniversalityReport:
    """Checks the algorithm from every canonical initial configuration of k robots
    on each ring size and partitions them into solved, certified unsolvable and
    discrepancies. An entry that exceeds the state limit is marked and the audit goes on.
    """
    report = UniversalityReport(algorithm.name, model, objective, k)
    tasks = []
    for n in n_range:
        configs = enumerate_initial_configurations(n, k, algorithm.palette, allow_towers=allow_towers)
        expected = count_configuration_classes(n, k, len(algorithm.palette), allow_towers=allow_towers)
        report.expected_classes[n] = expected
        if expected != len(configs):
            logger.error("n=%d: enumerated %d classes, orbit count gives %d", n, len(configs), expected)
        tasks.extend((config, algorithm, model, objective, state_limit, sym_mode) for config in configs)
    logger.info("auditing %s under %s on %d configurations", algorithm.name, model.value, len(tasks))

    workers = worker_count() if workers is None else workers
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            report.entries = list(pool.map(_audit_task, tasks))
    else:
        report.entries = [_audit_task(task) for task in tasks]
    return report
