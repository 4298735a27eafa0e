from .audit import AuditEntry, AuditStatus, UniversalityReport, audit_configuration, universality_audit  # noqa: F401
from .certificates import (  # noqa: F401
    CERTIFICATE_RULES,
    Certificate,
    CertificateKind,
    CertificateRule,
    certificate_holds,
    classify_configuration,
)
from .coverage import CoverageGraph, CoverageState  # noqa: F401
from .enumeration import count_configuration_classes, enumerate_initial_configurations  # noqa: F401
from .exploration import check_perpetual_exploration, check_terminating_exploration  # noqa: F401
from .scc import strongly_connected_components  # noqa: F401
from .state_space import Edge, ReachableGraph, build_reachable_graph  # noqa: F401
from .territory import TerritorySet, find_independent_territory_set  # noqa: F401
from .verdict import Lasso, Objective, Outcome, TerminalTrace, Verdict, Witness  # noqa: F401
