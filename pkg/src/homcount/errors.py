"""Exception types shared by all modules.

Every domain error carries a ``label`` naming the module it came from; the
CLI reports it verbatim in its ``{"error": ...}`` object.
"""

from __future__ import annotations


class HomcountError(ValueError):
    label = "homcount"


class GroupError(HomcountError):
    label = "group-core"


class CharTableError(HomcountError):
    label = "char-table"


class SurfaceError(HomcountError):
    label = "surface-count"


class GraphError(HomcountError):
    label = "fatgraph"


class GenfunError(HomcountError):
    label = "genfun"


class WorkBoundExceeded(HomcountError):
    """An enumeration would exceed the configured work bound."""

    def __init__(self, needed: int, bound: int, what: str = "enumeration", label: str | None = None):
        super().__init__(f"{what} needs {needed} steps, work bound is {bound}")
        self.needed = needed
        self.bound = bound
        if label is not None:
            self.label = label
