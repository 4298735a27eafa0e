from .algorithms import *  # noqa: F401,F403
from .cli import Report, build_parser, emit_report, main, run  # noqa: F401
from .core import *  # noqa: F401,F403
from .exceptions import ChoiceError, ConfigurationError, RingExplorerError, RuleError, StateLimitExceeded  # noqa: F401
from .semantics import *  # noqa: F401,F403
from .settings import DEFAULT_MAX_STEPS, DEFAULT_STATE_LIMIT, REFERENCE_RING_SIZE, worker_count  # noqa: F401
from .verifier import *  # noqa: F401,F403
from .version import __version__  # noqa: F401
