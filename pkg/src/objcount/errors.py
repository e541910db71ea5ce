"""Exception types shared across the package."""


class ObjcountError(Exception):
    """Base class for errors raised by this package."""


class MalformedImageError(ObjcountError):
    """Image file has a broken or inconsistent header/payload."""


class UnsupportedImageError(ObjcountError):
    """Image file is syntactically valid but uses an unsupported format or depth."""


class ParameterError(ObjcountError, ValueError):
    """A configuration value is out of its allowed range."""


class DegenerateHistogramError(ObjcountError):
    """Histogram carries no usable signal (constant image, zero peak)."""


class EmptyHistogramError(ObjcountError):
    """Histogram has no runs at all; no peak exists."""


class PipelineError(ObjcountError):
    """Failure inside the counting pipeline, attributed to a stage.

    stage: 1=segmentation, 2=enhancement, 3=sizing, 4=counting
    """

    STAGE_NAMES = {1: "segmentation", 2: "enhancement", 3: "sizing", 4: "counting"}

    def __init__(self, stage: int, message: str):
        self.stage = stage
        self.stage_name = self.STAGE_NAMES.get(stage, "unknown")
        super().__init__(f"stage {stage} ({self.stage_name}): {message}")
