"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all errors raised by this package."""


class FactorizationIncomplete(ToolkitError):
    """An operation needed a complete factorization but the effort budget ran out.

    The partial result is attached as ``.partial`` so callers can inspect the
    factors that were found and the unfactored cofactor.
    """

    def __init__(self, partial):
        self.partial = partial
        super().__init__(
            f"factorization of {partial.base_n} incomplete: cofactor {partial.cofactor} unfactored"
        )


class NotCoprime(ToolkitError):
    """Arguments were required to be coprime but are not."""


class NotPrime(ToolkitError):
    """An argument was required to be prime but is composite (or < 2)."""


class CapExceeded(ToolkitError):
    """An enumeration grew past its configured size cap."""


class BadAction(ToolkitError):
    """The parameters of a cyclic-by-cyclic presentation are inconsistent."""


class NotCppPrime(ToolkitError):
    """The prime is not of the form 2^a * 3^b + 1 required by the C_pp table."""
