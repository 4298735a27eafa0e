from .choice import AdversaryChoice, AsyncLC, AsyncM, FsyncChoice, SsyncChoice, parse_choice, parse_script  # noqa: F401
from .scheduler import SchedulerModel, SymmetryMode  # noqa: F401
from .simulation import FairPolicy, FirstPolicy, Policy, RandomPolicy, ScriptedPolicy, simulate  # noqa: F401
from .step import (  # noqa: F401
    apply_choice,
    apply_with_service,
    enabled_robots,
    enumerate_choices,
    is_quiescent,
    robot_options,
    successors,
)
from .system_state import RobotState, SystemState  # noqa: F401
from .trace import Trace, TraceStep  # noqa: F401
