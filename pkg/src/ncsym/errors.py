"""Exception types shared across the package."""


class VerificationFailure(RuntimeError):
    """A computation contradicted a property the library is meant to certify.

    Carries enough context (degree, shape, ...) to report the offending case.
    """

    def __init__(self, message, **context):
        super().__init__(message)
        self.context = dict(context)


class InternalCheckError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad user input."""
