"""Exception hierarchy shared by all iterline modules."""

from __future__ import annotations


class IterlineError(Exception):
    """Base class for all library errors."""


class IndexOutOfRange(IterlineError):
    pass


class DuplicateLabel(IterlineError):
    pass


class LabelCountMismatch(IterlineError):
    pass


class ResourceLimit(IterlineError):
    """An intermediate object exceeded a configured size cap."""


class NotAcyclic(IterlineError):
    pass


class EmptyDigraph(IterlineError):
    pass


class ParamOutOfRange(IterlineError):
    pass


class NotRegular(IterlineError):
    """A supplied vertex partition is not forward-regular.

    Carries the first offending vertex and the class index whose arc count
    disagrees with the class representative.
    """

    def __init__(self, vertex: int, class_index: int, message: str = ""):
        self.vertex = vertex
        self.class_index = class_index
        super().__init__(
            message
            or f"partition not forward-regular at vertex {vertex}, class {class_index}"
        )


class DimensionMismatch(IterlineError):
    pass


class InsufficientTerms(IterlineError):
    pass


class NoRecurrenceFound(IterlineError):
    pass


class MethodDisagreement(IterlineError):
    """Two sequence-computation methods produced different terms.

    Always signals an implementation bug; never swallowed.
    """

    def __init__(self, index: int, values: dict):
        self.index = index
        self.values = values
        super().__init__(f"methods disagree at index {index}: {values}")


class EnumerationCapExceeded(IterlineError):
    pass


class DbUnreadable(IterlineError):
    pass


class TooFewTerms(IterlineError):
    pass


class OeisRemoteError(IterlineError):
    pass


class OeisTimeout(OeisRemoteError):
    pass


class OeisOffline(OeisRemoteError):
    pass


class MalformedResponse(OeisRemoteError):
    pass
