"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on.

    The message is a short phrase ("inputs must be non-zero", "not
    invertible", "scan too large", ...) suitable for direct display; the
    CLI maps this exception to exit code 1.
    """
