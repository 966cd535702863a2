"""Exception types shared across the package."""


class CoverCountError(Exception):
    """Base class for all package-specific errors."""


class PolyParseError(CoverCountError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ZeroPolynomialError(CoverCountError):
    """An operation that needs a degree was handed the zero polynomial."""


class ArityMismatchError(CoverCountError):
    """Polynomial arity does not match the weight vector or variable count."""


class CoverFormError(CoverCountError):
    """Input cannot be written as a valid monic cover polynomial."""


class BudgetExceededError(CoverCountError):
    """An enumeration or search exceeded its caller-supplied budget."""


class HypothesisFailure(CoverCountError):
    """The input violates a hypothesis of the bound being tested."""


class CharacteristicTooSmall(CoverCountError):
    """The prime is too small for the differential irreducibility criterion."""

    def __init__(self, p: int, required: int):
        super().__init__(
            f"prime {p} is too small for the differential criterion "
            f"(need p > {required}); choose a larger prime"
        )
        self.p = p
        self.required = required
