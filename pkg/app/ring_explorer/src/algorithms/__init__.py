from .appendix_rules import APPENDIX_RULES, CANDIDATE_RULES, EXCLUDED_RULES, AppendixRuleCatalog  # noqa: F401
from .catalog import (  # noqa: F401
    ALGORITHMS,
    BUILTIN_NAMES,
    BUILTIN_SOURCES,
    AlgorithmCatalog,
    builtin_algorithm,
    color_swapped,
    export_algorithm,
    load_algorithm,
)
from .config_classes import CATALOG, CONFIG_CLASSES, ConfigClassCatalog  # noqa: F401
from .cycle_analysis import (  # noqa: F401
    CycleAnalysis,
    Transition,
    TransitionGraph,
    block_start,
    cexp_transition_graph,
    class_label,
    cycle_displacement,
    find_progressing_rule_cycles,
    rule_outcomes,
    simple_cycles,
)
