"""Exception types shared across the package.

Split into two families so the CLI can map them to exit codes:
``UsageError`` subclasses come from bad user input, ``ComputationError``
subclasses from failures during an otherwise well-formed computation.
"""


class UsageError(ValueError):
    """Bad input supplied by the caller (CLI exit code 1)."""


class ComputationError(RuntimeError):
    """Failure inside a well-formed computation (CLI exit code 2)."""


class EmptyWordError(UsageError):
    def __init__(self):
        super().__init__("word is empty; expected a nonempty string over 'X'/'Y'")


class InvalidCharacterError(UsageError):
    def __init__(self, char: str, position: int):
        self.char = char
        self.position = position
        super().__init__(
            f"invalid character {char!r} at position {position}; alphabet is 'X'/'Y'"
        )


class InvalidOrderError(UsageError):
    def __init__(self, order: int):
        self.order = order
        super().__init__(f"order must be >= 1, got {order}")


class InvalidBlockError(UsageError):
    def __init__(self):
        super().__init__("block must contain at least one letter (u + v >= 1)")


class TableOverflowError(ComputationError):
    def __init__(self, required_order: int, max_order: int):
        self.required_order = required_order
        self.max_order = max_order
        super().__init__(
            f"coefficient tables cover order {max_order}, "
            f"but order {required_order} is required"
        )


class TableAllocationError(ComputationError):
    def __init__(self, max_order: int):
        self.max_order = max_order
        super().__init__(f"failed to allocate coefficient tables for order {max_order}")


class DimensionMismatchError(UsageError):
    def __init__(self, dims):
        self.dims = tuple(dims)
        super().__init__(f"matrix dimensions do not match: {self.dims}")


class NotNearIdentityError(ComputationError):
    def __init__(self, norm: float):
        self.norm = norm
        super().__init__(
            f"matrix is not close enough to the identity for the logarithm: "
            f"||A - I|| = {norm:.6g} >= 1"
        )
