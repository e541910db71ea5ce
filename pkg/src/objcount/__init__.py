"""Statistical object counting for images of similarly sized, round objects.

Count = total object area / area of one object, with the per-object
diameter read off the run-length histogram of the segmented image.
"""

from .counting import CountResult, PipelineConfig, count_objects, run_pipeline
from .enhance import median_filter
from .errors import (
    DegenerateHistogramError,
    EmptyHistogramError,
    MalformedImageError,
    ObjcountError,
    ParameterError,
    PipelineError,
    UnsupportedImageError,
)
from .imgio import load_gray, save_gray, save_mask
from .segmentation import (
    SegmentationConfig,
    apply_threshold,
    otsu_level,
    region_grow,
    segment,
)
from .sizing import (
    RunHistogram,
    SizeEstimate,
    SmoothedHistogram,
    analytic_g,
    analytic_h,
    estimate_diameter,
    extract_runs,
    sample_analytic_g,
    smooth,
)
from .synthetic import (
    ExperimentResult,
    SceneSpec,
    SceneTruth,
    generate_scene,
    run_density_experiment,
)

__version__ = "0.1.0"

__all__ = [
    "CountResult",
    "PipelineConfig",
    "count_objects",
    "run_pipeline",
    "median_filter",
    "DegenerateHistogramError",
    "EmptyHistogramError",
    "MalformedImageError",
    "ObjcountError",
    "ParameterError",
    "PipelineError",
    "UnsupportedImageError",
    "load_gray",
    "save_gray",
    "save_mask",
    "SegmentationConfig",
    "apply_threshold",
    "otsu_level",
    "region_grow",
    "segment",
    "RunHistogram",
    "SizeEstimate",
    "SmoothedHistogram",
    "analytic_g",
    "analytic_h",
    "estimate_diameter",
    "extract_runs",
    "sample_analytic_g",
    "smooth",
    "ExperimentResult",
    "SceneSpec",
    "SceneTruth",
    "generate_scene",
    "run_density_experiment",
]
