"""Exception types shared across the package."""


class BotscopeError(Exception):
    """Base class for all package errors."""


class ParseError(BotscopeError):
    """Document is not well-formed (bad JSON, bad line in a corpus file)."""


class SchemaError(BotscopeError):
    """Document violates the snapshot schema (missing field, bad value)."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class InsufficientData(BotscopeError):
    """Not enough observations to compute the requested statistic."""


class LexiconError(BotscopeError):
    """A sentiment or tagger lexicon file is malformed."""


class EmptyNode(BotscopeError):
    """Impurity requested for a node with no samples."""


class SingleClassError(BotscopeError):
    """Training data contains only one label."""


class RegistryMismatch(BotscopeError):
    """Feature vector and model were built against different registries."""


class TooFewSamples(BotscopeError):
    """A class has fewer members than the requested fold count."""


class StorageError(BotscopeError):
    """Score store I/O failure."""


class EmptyStore(BotscopeError):
    """Aggregate statistic requested from a store with no records."""


class NotFound(BotscopeError):
    """No snapshot available for the requested screen name."""


class UpstreamError(BotscopeError):
    """The configured snapshot backend failed (non-2xx, timeout)."""


class MissingFile(BotscopeError):
    """A required input file does not exist."""
