"""Exception types shared across the pipeline."""


class ResuMatchError(Exception):
    """Base class for all errors raised by this package."""


class MalformedDocument(ResuMatchError):
    """Input bytes cannot be interpreted as the declared document kind."""


class EmptyDocument(ResuMatchError):
    """No extractable text; the caller may route to an external provider."""


class EmptyText(ResuMatchError):
    """Embedding requested for a string that is empty after trimming."""


class ProviderUnavailable(ResuMatchError):
    """External embedding service timed out or refused the request."""


class MalformedResponse(ResuMatchError):
    """External embedding service answered with an invalid payload."""


class DimensionMismatch(ResuMatchError):
    """Vectors from different providers or dimensions were combined."""


class InvalidWeights(ResuMatchError):
    """Weight profile is negative or does not sum to one."""


class InvalidJobDescription(ResuMatchError):
    """Job description failed validation (e.g. no required skills)."""


class InconsistentInputs(ResuMatchError):
    """A match result was paired with a profile or job it was not computed from."""


class NotFound(ResuMatchError):
    """Record id does not exist in the store."""
