"""Exception hierarchy shared by every grouplab module."""


class GroupLabError(Exception):
    """Base class for all grouplab errors."""


class DegreeMismatch(GroupLabError, ValueError):
    pass


class NotAPermutation(GroupLabError, ValueError):
    pass


class CapExceeded(GroupLabError):
    """A configured size cap (degree, enumeration, lattice, table) was hit."""

    def __init__(self, what: str, value: int, cap: int):
        super().__init__(f"{what} {value} exceeds cap {cap}")
        self.what = what
        self.value = value
        self.cap = cap


class NotASubgroup(GroupLabError, ValueError):
    pass


class NotNormal(GroupLabError, ValueError):
    pass


class NotMember(GroupLabError, ValueError):
    pass


class ParseError(GroupLabError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        parts = []
        if line is not None:
            parts.append(f"line {line}")
        if column is not None:
            parts.append(f"column {column}")
        loc = ", ".join(parts) + ": " if parts else ""
        super().__init__(loc + message)
        self.message = message
        self.line = line
        self.column = column


class SpecError(GroupLabError, ValueError):
    """Malformed group specification or semidirect action."""
