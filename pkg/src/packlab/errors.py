"""Exception hierarchy shared across the library.

The CLI maps these onto exit codes: ConfigError -> 2, PreconditionError
(and subclasses) -> 3, TruncatedCurveError -> 4.
"""


class PacklabError(Exception):
    pass


class ConfigError(PacklabError):
    """Malformed user input: bad rational strings, shapes, unknown names."""


class PreconditionError(PacklabError, ValueError):
    """A mathematical precondition failed (wrong signature, norm, Soddy...)."""


class DimensionError(PreconditionError):
    pass


class SignatureError(PreconditionError):
    pass


class NormalizationError(PreconditionError):
    """A vector that must have a prescribed exact norm does not."""


class PackingError(PreconditionError):
    """Polytope/cluster data does not define a sphere packing."""


class TruncatedCurveError(PacklabError):
    """Refusal to fit an exponent through possibly-incomplete counts."""


class CheckpointError(PacklabError):
    """Enumeration hit its memory budget; carries the checkpoint path."""

    def __init__(self, message: str, path: str):
        super().__init__(message)
        self.path = path
