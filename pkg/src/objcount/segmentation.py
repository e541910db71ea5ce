"""Binary segmentation of grayscale images.

Two methods: global Otsu thresholding and seeded region growing. Both
produce a bool mask (True = object). Polarity selects whether objects are
brighter or darker than the background.
"""

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateHistogramError, ParameterError

BRIGHT = "bright_objects"
DARK = "dark_objects"


@dataclass(frozen=True)
class SegmentationConfig:
    method: str = "otsu"  # "otsu" | "region_growing"
    polarity: str = BRIGHT
    rg_tolerance: int = 20
    rg_seed_threshold: int = 200

    def validate(self):
        if self.method not in ("otsu", "region_growing"):
            raise ParameterError(f"unknown segmentation method {self.method!r}")
        if self.polarity not in (BRIGHT, DARK):
            raise ParameterError(f"unknown polarity {self.polarity!r}")
        if not 0 <= self.rg_tolerance <= 255:
            raise ParameterError("rg_tolerance must be in [0,255]")
        if not 0 <= self.rg_seed_threshold <= 255:
            raise ParameterError("rg_seed_threshold must be in [0,255]")


def otsu_level(img: np.ndarray) -> int:
    """Threshold level maximizing between-class variance of the 256-bin histogram.

    The split is [0,t] vs [t+1,255]; ties break toward the smallest t. Uses
    exact integer arithmetic so the maximizer is free of float round-off.
    Raises DegenerateHistogramError for constant images.
    """
    img = np.asarray(img)
    if img.size == 0:
        raise ParameterError("empty image")
    hist = np.bincount(img.ravel().astype(np.uint8), minlength=256)
    counts = [int(c) for c in hist]
    total = sum(counts)
    total_sum = sum(i * c for i, c in enumerate(counts))

    # maximize A^2/(N0*N1) with A = S0*N1 - S1*N0 (proportional to the
    # between-class variance); compared exactly by cross-multiplication
    best_t = None
    best_num = 0
    best_den = 1
    n0 = 0
    s0 = 0
    for t in range(256):
        n0 += counts[t]
        s0 += t * counts[t]
        n1 = total - n0
        if n0 == 0 or n1 == 0:
            continue
        a = s0 * n1 - (total_sum - s0) * n0
        num = a * a
        den = n0 * n1
        if best_t is None or num * best_den > best_num * den:
            best_t, best_num, best_den = t, num, den
    if best_t is None or best_num == 0:
        raise DegenerateHistogramError("constant image: all splits have zero variance")
    return best_t


def apply_threshold(img: np.ndarray, level: int, polarity: str = BRIGHT) -> np.ndarray:
    """Binarize at `level`: bright objects are pixels > level, dark are <= level."""
    if not 0 <= level <= 255:
        raise ParameterError("level must be in [0,255]")
    img = np.asarray(img)
    if polarity == BRIGHT:
        return img > level
    if polarity == DARK:
        return img <= level
    raise ParameterError(f"unknown polarity {polarity!r}")


def region_grow(img: np.ndarray, cfg: SegmentationConfig) -> np.ndarray:
    """Seeded region growing.

    Every pixel passing the seed threshold is object. Regions grow from seed
    components by 4-connectivity: a neighbor joins when it is itself a seed or
    its luminance is within cfg.rg_tolerance of the region's running mean.
    Deterministic: row-major seed scan, FIFO frontier.
    """
    cfg.validate()
    img = np.asarray(img)
    h, w = img.shape
    if cfg.polarity == BRIGHT:
        seeds = img >= cfg.rg_seed_threshold
    else:
        seeds = img <= cfg.rg_seed_threshold
    out = np.zeros((h, w), dtype=bool)
    vals = img.astype(np.int64)
    tol = cfg.rg_tolerance

    for sy, sx in zip(*np.nonzero(seeds)):
        if out[sy, sx]:
            continue
        region_sum = int(vals[sy, sx])
        region_n = 1
        out[sy, sx] = True
        frontier = deque([(int(sy), int(sx))])
        while frontier:
            y, x = frontier.popleft()
            for ny, nx in ((y - 1, x), (y + 1, x), (y, x - 1), (y, x + 1)):
                if not (0 <= ny < h and 0 <= nx < w) or out[ny, nx]:
                    continue
                v = int(vals[ny, nx])
                if seeds[ny, nx] or abs(v * region_n - region_sum) <= tol * region_n:
                    out[ny, nx] = True
                    region_sum += v
                    region_n += 1
                    frontier.append((ny, nx))
    return out


def segment(img: np.ndarray, cfg: SegmentationConfig) -> np.ndarray:
    """Run the configured segmentation method."""
    cfg.validate()
    if cfg.method == "otsu":
        return apply_threshold(img, otsu_level(img), cfg.polarity)
    return region_grow(img, cfg)
