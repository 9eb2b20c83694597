"""Exception hierarchy shared across the package."""


class EdgeLiteError(Exception):
    """Base class for all errors raised by this package."""


class SizeError(EdgeLiteError):
    """Element count overflows the addressable range."""


class ShapeError(EdgeLiteError):
    """Tensor dimensions do not match what an operation requires."""


class DTypeError(EdgeLiteError):
    """Mixed or unsupported dtypes."""


class LayerSpecError(EdgeLiteError):
    """Invalid layer/augmentation parameters (e.g. non-positive output size)."""


class ConfigError(EdgeLiteError):
    """Inconsistent model or pipeline configuration."""


class ContractError(EdgeLiteError):
    """API misuse: stale backward context, quantizing a train-mode model, etc."""


class DataError(EdgeLiteError):
    """Bad labels, empty splits, insufficient images."""


class PlacementError(EdgeLiteError):
    """Compositor placement falls outside the background bounds."""


class DecodeError(EdgeLiteError):
    """Malformed or truncated image data."""


class CalibrationError(EdgeLiteError):
    """Quantized inference is missing range statistics for an edge."""


class MeasurementError(EdgeLiteError):
    """Benchmark clock misbehaved (non-monotonic samples)."""


class CapabilityError(EdgeLiteError):
    """A measurement was requested that the model/mode cannot provide."""


class ModelFileError(EdgeLiteError):
    """Base class for model (de)serialization failures."""


class BadMagicError(ModelFileError):
    """File does not start with the expected magic bytes."""


class VersionError(ModelFileError):
    """File version is not supported."""


class TruncatedError(ModelFileError):
    """File ends before the declared payload."""


class ChecksumError(ModelFileError):
    """Trailing CRC32 does not match the file contents."""
