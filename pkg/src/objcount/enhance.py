"""Binary median filtering.

For a binary mask the median is a majority vote over the window. Implemented
with a summed-area table, so cost is O(pixels) independent of window size.
"""

import numpy as np

from .errors import ParameterError


def median_filter(mask: np.ndarray, window: int = 5) -> np.ndarray:
    """Majority vote in a window x window neighborhood of each pixel.

    Out-of-bounds neighbors count as background, which biases the border
    toward background. window must be odd, >=1 and <= min(height, width);
    window^2 is odd so the majority is always strict.
    """
    mask = np.asarray(mask, dtype=bool)
    if mask.ndim != 2:
        raise ParameterError("mask must be 2-D")
    h, w = mask.shape
    if window < 1 or window % 2 == 0:
        raise ParameterError(f"window must be odd and >=1, got {window}")
    if window > min(h, w):
        raise ParameterError(f"window {window} exceeds image extent {h}x{w}")

    half = window // 2

    # horizontal windowed sums from per-row prefix sums; the zero columns on
    # the left and the replicated totals on the right encode the zero padding
    dt = np.int16 if w + 1 < 2**15 else np.int32
    c = np.zeros((h, w + window), dtype=dt)
    np.cumsum(mask, axis=1, dtype=dt, out=c[:, half + 1 : w + half + 1])
    c[:, w + half + 1 :] = c[:, w + half : w + half + 1]
    row_sums = c[:, window:] - c[:, :w]

    # vertical pass as a sliding accumulator row: O(1) per pixel, no
    # full-size prefix array to thrash the cache on large images
    acc_dt = np.int64 if window > 46340 else np.int32  # keeps window^2 in range
    acc = row_sums[: half + 1].sum(axis=0, dtype=acc_dt)
    majority = window * window // 2
    out = np.empty((h, w), dtype=bool)
    for y in range(h):
        out[y] = acc > majority
        if y + half + 1 < h:
            acc += row_sums[y + half + 1]
        if y - half >= 0:
            acc -= row_sums[y - half]
    return out
