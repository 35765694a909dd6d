"""Size guards for the brute-force paths."""

from __future__ import annotations

import os

MAX_GROUP_ORDER = 10_000
DEFAULT_WORK_BOUND = 10**9
WORK_BOUND_ENV = "HOMCOUNT_WORK_BOUND"


def work_bound(bound: int | None = None) -> int:
    """Explicit bound, else ``$HOMCOUNT_WORK_BOUND``, else 10**9."""
    if bound is not None:
        return int(bound)
    env = os.environ.get(WORK_BOUND_ENV)
    if env:
        return int(env)
    return DEFAULT_WORK_BOUND
