from enum import Enum


class SchedulerModel(Enum):
    FSYNC = "fsync"
    SSYNC = "ssync"
    ASYNC = "async"

    @property
    def needs_fairness(self) -> bool:
        "FSYNC activates every enabled robot in every round"
        return self is not SchedulerModel.FSYNC


class SymmetryMode(Enum):
    """How robots activated together on one node with equal color resolve
    their choices: independently, or locked to one common decision.
    """

    INDEPENDENT = "independent"
    LOCKED = "locked"
