"""Exception types shared across the package."""


class PauliHamError(Exception):
    """Base class for all package errors."""


class PauliSyntaxError(PauliHamError):
    """A Pauli word string does not match the ``sign letter{n}`` grammar."""


class InstanceFormatError(PauliHamError):
    """An instance file is malformed.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CommutationError(PauliHamError):
    """A product of two anticommuting words was requested.

    The mod-4 phase sum came out odd, which can only happen when the
    commutation promise is violated.
    """


class PromiseViolationError(PauliHamError):
    """The instance violates the pairwise-commutation promise.

    ``pairs`` holds the offending 0-based generator index pairs (j, k),
    j < k, when they are known.
    """

    def __init__(self, message, pairs=()):
        super().__init__(message)
        self.pairs = tuple(pairs)


class OracleLimitError(PauliHamError):
    """A dense-oracle request exceeds the configured qubit limit."""


class ClosureBoundError(PauliHamError):
    """Group closure enumeration exceeded the element bound."""
