"""Errors raised by the embedding frontend."""


class EmbedError(Exception):
    """Base class for all errors raised by this package."""


class ModelLoadFailure(EmbedError):
    """The requested encoder weights could not be resolved or loaded."""


class UnreadableSource(EmbedError):
    """A source item is missing the modality the encoder needs, or an
    image file cannot be decoded."""


class DimMismatch(EmbedError):
    """The encoder emitted a vector of unexpected width."""


class BadManifest(EmbedError):
    """The items manifest is not valid JSON or violates the schema."""
