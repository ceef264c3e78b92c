"""Exception hierarchy shared by every module of the package."""


class UpdownError(Exception):
    """Base class. ``path`` is filled in by the JSON importer when known."""

    def __init__(self, message: str, *, edge_index: int | None = None, path: str | None = None):
        super().__init__(message)
        self.message = message
        self.edge_index = edge_index
        self.path = path

    def __str__(self) -> str:
        if self.path:
            return f"{self.message} (at {self.path})"
        return self.message


class NonAdjacentEdge(UpdownError):
    pass


class DivisibilityViolation(UpdownError):
    pass


class DuplicateEdge(UpdownError):
    pass


class UnknownObject(UpdownError):
    pass


class InvalidAutOrder(UpdownError):
    pass


class RankOrderError(UpdownError):
    pass


class TruncationError(UpdownError):
    pass


class OrderExceedsTable(UpdownError):
    pass


class InvalidConstantTerm(UpdownError):
    pass


class UnknownFamily(UpdownError):
    pass


class UnsupportedFamily(UpdownError):
    pass


class NotUnivalent(UpdownError):
    pass


class RankOutOfRange(UpdownError):
    pass


class PreconditionFailed(UpdownError):
    pass


class BudgetExceeded(UpdownError):
    pass


class SchemaError(UpdownError):
    pass
