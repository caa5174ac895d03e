"""Exception types shared across the package."""


class UniverseError(ValueError):
    """A universe declaration is malformed (bad ids, bad blocks, bad kinds)."""


class UniverseMismatchError(UniverseError):
    """An operation received qsets that belong to different universes."""


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration would exceed the configured case budget.

    Callers should fall back to a sampling strategy or shrink the input.
    """


class FormulaSyntaxError(ValueError):
    """Raised by the formula parser; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ValuationError(ValueError):
    """A valuation is missing an atom or maps into the wrong universe."""
