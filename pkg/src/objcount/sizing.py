"""Object size estimation from run-length statistics.

The empirical side builds a histogram of run lengths (maximal horizontal or
vertical object-pixel sequences), smooths it with a fixed-divisor mean
filter, and reads off a diameter estimate: the first length past the peak
where the smoothed curve drops to a fraction alpha of the peak value. The
analytic side provides the ideal chord-length densities used to validate
that estimator.
"""

import io
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateHistogramError, EmptyHistogramError, ParameterError

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


@dataclass(frozen=True)
class RunHistogram:
    """counts[x] = number of runs of length exactly x (index 0 always zero)."""

    counts: np.ndarray
    direction: str = HORIZONTAL

    @property
    def max_length(self) -> int:
        return len(self.counts) - 1

    @property
    def total_runs(self) -> int:
        return int(self.counts.sum())


@dataclass(frozen=True)
class SmoothedHistogram:
    """Mean-filtered histogram values over x = 0 .. n_bins + window."""

    values: np.ndarray
    window: int
    x_max: int
    peak: float
    n_bins: int  # highest length carried by the underlying raw data


@dataclass(frozen=True)
class SizeEstimate:
    diameter: int
    alpha: float
    x_max: int
    peak: float
    tail_crossing: bool = field(default=False)  # crossing fell in the zero-padded tail


def extract_runs(mask: np.ndarray, direction: str = HORIZONTAL) -> RunHistogram:
    """Histogram of object-run lengths along rows (horizontal) or columns.

    A run is a maximal consecutive stretch of object pixels within a single
    scan line. Single vectorized pass, linear in pixel count.
    """
    mask = np.asarray(mask, dtype=bool)
    if direction == VERTICAL:
        work = mask.T
    elif direction == HORIZONTAL:
        work = mask
    else:
        raise ParameterError(f"unknown direction {direction!r}")

    h, w = work.shape
    padded = np.zeros((h, w + 2), dtype=bool)
    padded[:, 1:-1] = work
    steps = np.diff(padded.astype(np.int8), axis=1)
    starts = np.nonzero(steps == 1)[1]
    ends = np.nonzero(steps == -1)[1]
    lengths = ends - starts
    counts = np.bincount(lengths, minlength=1).astype(np.int64)
    counts[0] = 0
    return RunHistogram(counts=counts, direction=direction)


def analytic_h(d: float, x: float) -> float:
    """Ideal chord-length density of a disc of diameter d: x / sqrt(d^2 - x^2).

    Defined for 0 <= x < d; zero outside [0, d). The density diverges as x
    approaches d, so x == d is out of domain.
    """
    if d <= 0:
        raise ParameterError("diameter must be positive")
    if x == d:
        raise ParameterError(f"density is unbounded at x == d == {d}")
    if x < 0 or x > d:
        return 0.0
    return x / float(np.sqrt(d * d - x * x))


def analytic_g(d_min: int, d_max: int, x: float) -> float:
    """Mixture density for integer diameters d_min..d_max: sum of analytic_h.

    Divergent terms (x == d) are excluded, matching the x < d domain.
    """
    if d_min > d_max:
        raise ParameterError("d_min must not exceed d_max")
    total = 0.0
    for d in range(d_min, d_max + 1):
        if x < d:
            total += analytic_h(d, x)
    return total


def sample_analytic_g(d_min: int, d_max: int) -> np.ndarray:
    """analytic_g evaluated at integer x = 0 .. d_max (endpoint term omitted)."""
    return np.array([analytic_g(d_min, d_max, x) for x in range(d_max + 1)])


def smooth(hist, window: int = 11) -> SmoothedHistogram:
    """Mean filter with fixed divisor `window` and zero-padding outside the data.

    values[x] = sum(counts[x-h .. x+h]) / window with h = (window-1)/2 and
    counts treated as zero outside their range; this keeps the constant
    denominator of the defining formula rather than renormalizing at edges.
    The output domain extends `window` bins past the data so the estimator's
    scan always reaches the zero tail. x_max is the smallest argmax.
    """
    if window < 1 or window % 2 == 0:
        raise ParameterError(f"window must be odd and >=1, got {window}")
    if isinstance(hist, RunHistogram):
        counts = hist.counts
    else:
        counts = np.asarray(hist, dtype=np.float64)
    if counts.sum() == 0:
        raise EmptyHistogramError("histogram has no runs")

    n_bins = len(counts) - 1
    half = window // 2
    extended = np.concatenate([counts.astype(np.float64), np.zeros(window)])
    padded = np.concatenate([np.zeros(half), extended, np.zeros(half)])
    values = np.convolve(padded, np.full(window, 1.0 / window), mode="valid")
    x_max = int(np.argmax(values))  # argmax returns the smallest index on ties
    return SmoothedHistogram(
        values=values,
        window=window,
        x_max=x_max,
        peak=float(values[x_max]),
        n_bins=n_bins,
    )


def estimate_diameter(sh: SmoothedHistogram, alpha: float = 0.8) -> SizeEstimate:
    """First x past the peak where the smoothed value drops to alpha * peak.

    Returns the smallest x > x_max with values[x] <= alpha * peak. A crossing
    always exists because the smoothed values vanish past the data; when it
    happens in that zero tail the estimate is flagged via tail_crossing.
    """
    if not 0.0 < alpha < 1.0:
        raise ParameterError("alpha must be in (0,1)")
    if sh.peak <= 0.0:
        raise DegenerateHistogramError("smoothed histogram peak is zero")
    threshold = alpha * sh.peak
    for x in range(sh.x_max + 1, len(sh.values)):
        if sh.values[x] <= threshold:
            return SizeEstimate(
                diameter=x,
                alpha=alpha,
                x_max=sh.x_max,
                peak=sh.peak,
                tail_crossing=x > sh.n_bins + sh.window // 2,
            )
    raise DegenerateHistogramError("no crossing found")  # unreachable by construction


def raw_csv(hist: RunHistogram) -> str:
    """CSV dump "length,count" for all lengths up to max_length."""
    buf = io.StringIO()
    buf.write("length,count\n")
    for x in range(1, len(hist.counts)):
        buf.write(f"{x},{int(hist.counts[x])}\n")
    return buf.getvalue()


def smoothed_csv(sh: SmoothedHistogram) -> str:
    """CSV dump "length,value" with 6 fractional digits."""
    buf = io.StringIO()
    buf.write("length,value\n")
    for x in range(len(sh.values)):
        buf.write(f"{x},{sh.values[x]:.6f}\n")
    return buf.getvalue()
