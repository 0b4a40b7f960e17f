"""Exception types shared across the package."""


class InvalidPoset(ValueError):
    """Input does not describe a finite poset with a unique minimum."""


class NotALattice(ValueError):
    """Order relation is missing a join or a meet for some pair."""


class NotDistributive(ValueError):
    """Lattice fails the distributive law for some triple."""


class BudgetExceeded(RuntimeError):
    """A guarded enumeration would exceed its configured budget."""


class DocumentError(ValueError):
    """Malformed input document; carries a location when known."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column
