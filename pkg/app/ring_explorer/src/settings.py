from __future__ import annotations

import logging
import os

logger = logging.getLogger(__name__)

DEFAULT_STATE_LIMIT = 10**7
DEFAULT_MAX_STEPS = 100
REFERENCE_RING_SIZE = 12
THREADS_VARIABLE = "RING_EXPLORER_THREADS"


def worker_count() -> int:
    """Number of worker processes an audit may use, read from RING_EXPLORER_THREADS."""
    raw = os.environ.get(THREADS_VARIABLE)
    if raw is None or raw.strip() == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        logger.warning("ignoring %s=%r: not an integer", THREADS_VARIABLE, raw)
        return 1
    if value < 1:
        logger.warning("ignoring %s=%r: must be positive", THREADS_VARIABLE, raw)
        return 1
    return value
