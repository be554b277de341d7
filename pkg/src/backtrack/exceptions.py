"""Exception types shared across the toolkit."""


class TrackingError(Exception):
    """Base class for all toolkit errors."""


class ZeroAreaTarget(TrackingError):
    """A target box with zero area (or no frame overlap) where a crop is required."""


class InvalidScenario(TrackingError):
    """Synthetic scenario parameters are unusable."""


class MissingFrame(TrackingError):
    """A sequence frame file is absent or unreadable."""


class FormatError(TrackingError):
    """A sequence annotation or image file is malformed."""


class LengthMismatch(TrackingError):
    """Prediction and ground-truth lists differ in length."""


class EmptyEvaluation(TrackingError):
    """No evaluable frames remain after excluding absent ground truth."""
