from .algorithm import Algorithm, Issue, IssueKind, match_rules, validate_algorithm  # noqa: F401
from .color import DEFAULT_PALETTE, Color, Palette  # noqa: F401
from .configuration import (  # noqa: F401
    Configuration,
    canonicalize,
    format_configuration,
    parse_configuration,
    robot_views,
    transform_configuration,
)
from .node_content import EMPTY, NodeContent  # noqa: F401
from .rule import Action, Decision, Guard, Match, MatchResult, Movement, Orientation, Rule  # noqa: F401
from .transform import Transform  # noqa: F401
from .view import View  # noqa: F401
