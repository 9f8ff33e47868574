"""Exception taxonomy for the toolkit.

Every failure mode callers are expected to branch on gets its own class so
that file-format corruption, configuration mistakes, and data problems stay
distinguishable at the CLI boundary.
"""


class PscreenError(Exception):
    """Base class for all toolkit errors."""


class EmptyInputError(PscreenError):
    """An operation received an empty trace set or score sequence."""


class EmptyRequestError(PscreenError):
    """A generation request asked for zero items."""


class DegenerateDataError(PscreenError):
    """Data cannot be normalized (zero variance / constant traces)."""


class BoundsError(PscreenError):
    """An index is outside the valid range; the message names the index."""


class ConfigError(PscreenError):
    """Invalid configuration value, unknown key, or malformed config file."""


class ShapeError(PscreenError):
    """Tensor or trace shapes do not agree."""


class LeakageError(PscreenError):
    """Non-benign labels reached a benign-only stage (training/calibration)."""


class ResolutionError(PscreenError):
    """Too few calibration scores for the requested false-positive rate."""


class DataError(PscreenError):
    """Non-finite values where finite data is required."""


class DivergedTrainingError(PscreenError):
    """Training produced a non-finite loss; the message names the epoch."""


class CorruptModelError(PscreenError):
    """A loaded model is unusable (e.g. stored sigma <= 0)."""


class FormatError(PscreenError):
    """Base class for container/model file format violations."""


class BadMagicError(FormatError):
    """File does not start with the expected magic bytes."""


class VersionMismatchError(FormatError):
    """File carries an unsupported format version."""


class TruncatedPayloadError(FormatError):
    """File ends before the declared payload is complete."""


class LabelCountMismatchError(FormatError):
    """Label array length disagrees with the trace count."""


class BlobSizeMismatchError(FormatError):
    """Model tensor blob size disagrees with the manifest shapes."""
