"""End-to-end object counting.

Count = total object area divided by the area of one disc of the estimated
diameter. The pipeline chains segmentation, binary median filtering, run
histogram, smoothing, diameter estimation and the final division; every
stage is linear in the pixel count.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import enhance, segmentation, sizing
from .errors import (
    DegenerateHistogramError,
    EmptyHistogramError,
    ParameterError,
    PipelineError,
)


@dataclass(frozen=True)
class PipelineConfig:
    segmentation: segmentation.SegmentationConfig = field(
        default_factory=segmentation.SegmentationConfig
    )
    median_window: int = 5
    smooth_window: int = 11
    alpha: float = 0.8
    direction: str = sizing.HORIZONTAL

    def validate(self):
        self.segmentation.validate()
        if not 0.0 < self.alpha < 1.0:
            raise ParameterError("alpha must be in (0,1)")
        for name, w in (("median_window", self.median_window),
                        ("smooth_window", self.smooth_window)):
            if w < 1 or w % 2 == 0:
                raise ParameterError(f"{name} must be odd and >=1, got {w}")
        if self.direction not in (sizing.HORIZONTAL, sizing.VERTICAL):
            raise ParameterError(f"unknown direction {self.direction!r}")


@dataclass(frozen=True)
class CountResult:
    white_pixels: int
    diameter: int
    count_real: float
    count_rounded: int
    alpha: float
    x_max: int
    histogram_total: int
    warnings: tuple = ()

    def to_json(self) -> str:
        return json.dumps(
            {
                "count": self.count_rounded,
                "count_real": self.count_real,
                "diameter": self.diameter,
                "white_pixels": self.white_pixels,
                "x_max": self.x_max,
                "alpha": self.alpha,
                "warnings": list(self.warnings),
            }
        )


def count_objects(mask: np.ndarray, est: sizing.SizeEstimate,
                  histogram_total: int = 0, warnings: tuple = ()) -> CountResult:
    """Divide the object-pixel count by the area of one estimated disc."""
    if est.diameter <= 0:
        raise ParameterError("diameter must be positive")
    mask = np.asarray(mask, dtype=bool)
    white = int(mask.sum())
    count_real = white / (math.pi * (est.diameter / 2.0) ** 2)
    count_rounded = math.floor(count_real + 0.5)  # round half up
    return CountResult(
        white_pixels=white,
        diameter=est.diameter,
        count_real=count_real,
        count_rounded=count_rounded,
        alpha=est.alpha,
        x_max=est.x_max,
        histogram_total=histogram_total,
        warnings=warnings,
    )


def run_pipeline(img: np.ndarray, cfg: PipelineConfig | None = None) -> CountResult:
    """Full counting pipeline on a grayscale image.

    Stages: 1 segmentation, 2 median enhancement, 3 sizing (histogram,
    smoothing, diameter), 4 counting. Failures carry the stage number.
    """
    if cfg is None:
        cfg = PipelineConfig()
    cfg.validate()

    try:
        mask = segmentation.segment(img, cfg.segmentation)
    except DegenerateHistogramError as e:
        raise PipelineError(1, str(e)) from e

    mask = enhance.median_filter(mask, cfg.median_window)

    warnings = []
    try:
        hist = sizing.extract_runs(mask, cfg.direction)
        sh = sizing.smooth(hist, cfg.smooth_window)
        est = sizing.estimate_diameter(sh, cfg.alpha)
    except (EmptyHistogramError, DegenerateHistogramError) as e:
        raise PipelineError(3, str(e)) from e
    if est.tail_crossing:
        warnings.append("diameter crossing fell in the zero-padded histogram tail")

    return count_objects(mask, est, histogram_total=hist.total_runs,
                         warnings=tuple(warnings))
