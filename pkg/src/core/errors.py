"""Exceptions shared by all hypercover modules."""


class HypercoverError(Exception):
    """Base class for errors raised by hypercover operations."""

    pass


class UsageError(HypercoverError):
    """Exception raised when inputs violate an operation's preconditions."""

    pass


class ContractViolation(UsageError):
    """Exception raised when a caller breaks a hard contract, e.g. a non-square determinant."""

    pass


class CapacityError(HypercoverError):
    """Exception raised when an enumeration would exceed its budget or size cap."""

    def __init__(self, message: str, *, required: int | None = None, budget: int | None = None) -> None:
        """Initialize the capacity error.

        Args:
            message (str): Human readable description of the refused work
            required (int | None): Amount of work the request needs, when known
            budget (int | None): The budget that was exceeded
        """
        super().__init__(message)
        self.required = required
        self.budget = budget


class AmbiguityError(HypercoverError):
    """Exception raised when sparse recovery finds two distinct solutions."""

    def __init__(self, message: str, *, first: tuple[int, ...], second: tuple[int, ...]) -> None:
        """Initialize the ambiguity error.

        Args:
            message (str): Human readable description
            first (tuple[int, ...]): First solution in support enumeration order
            second (tuple[int, ...]): Second, distinct solution
        """
        super().__init__(message)
        self.first = first
        self.second = second


def check_budget(what: str, required: int, budget: int) -> None:
    """Raise CapacityError if ``required`` exceeds ``budget``.

    Args:
        what (str): Name of the enumeration, used in the message
        required (int): Number of items the enumeration would visit
        budget (int): Maximum allowed

    Raises:
        CapacityError: If the enumeration is too large
    """
    if required > budget:
        raise CapacityError(
            f"{what}: {required} candidates exceed the budget of {budget}", required=required, budget=budget
        )
