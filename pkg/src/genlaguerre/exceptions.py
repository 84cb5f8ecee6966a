"""Exceptions raised by genlaguerre."""


class ParameterError(ValueError):
    """A parameter lies outside the domain a constructor accepts."""


class UnsupportedParameterError(ParameterError):
    """The requested construction is only defined for q = 1."""


class CompositionTooLargeError(ParameterError):
    """The composition-sum expansion was asked for an order above its cap."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(
            f"composition expansion at n={n} exceeds the cap of {cap} "
            f"(2^{n - 1} terms); raise the cap explicitly to proceed"
        )
