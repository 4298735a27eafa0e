from __future__ import annotations


class RingExplorerError(Exception):
    """Base class of every error raised on purpose by this package."""


class ConfigurationError(RingExplorerError, ValueError):
    pass


class RuleError(RingExplorerError, ValueError):
    pass


class ChoiceError(RingExplorerError, ValueError):
    pass


class StateLimitExceeded(RingExplorerError):
    def __init__(self, limit: int, frontier: int) -> None:
        super().__init__(f"state limit of {limit} canonical states exceeded ({frontier} states still queued)")
        self.limit = limit
        self.frontier = frontier
