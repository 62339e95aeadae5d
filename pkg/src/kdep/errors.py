"""Exception types shared across the package."""


class NotPrimePowerError(ValueError):
    """The requested field order is not a prime power."""


class FieldTooLargeError(ValueError):
    """The requested field order exceeds the configured maximum."""


class EnumerationOverflowError(ValueError):
    """An enumeration would produce more items than the configured limit."""


class EmptyGroundSetError(ValueError):
    """A matroid needs at least one element."""


class BasisSizeError(ValueError):
    """A basis family contains sets of unequal size."""


class ExchangeAxiomError(ValueError):
    """Basis-exchange failed; carries a witness triple (A, a, B)."""

    def __init__(self, a_set, element, b_set):
        self.witness = (frozenset(a_set), element, frozenset(b_set))
        super().__init__(
            f"basis exchange fails for A={sorted(a_set)}, a={element}, B={sorted(b_set)}"
        )


class BudgetExceededError(RuntimeError):
    """Work estimate exceeds the configured budget.

    `k` is set when a profile computation identifies the offending subset size.
    """

    def __init__(self, message, k=None):
        self.k = k
        super().__init__(message)


class NoFullRankMatrixError(ValueError):
    """No full-rank matrix exists for the requested shape (s < r)."""


class DocumentError(ValueError):
    """Parse failure in a line-oriented document; carries line and column."""

    def __init__(self, line, col, message):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, column {col}: {message}")
