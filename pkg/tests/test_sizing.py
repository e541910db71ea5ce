import numpy as np
import pytest

from objcount import sizing, synthetic
from objcount.errors import (
    DegenerateHistogramError,
    EmptyHistogramError,
    ParameterError,
)


def lone_disc_mask(d, margin=10):
    spec = synthetic.SceneSpec(d + 2 * margin, d + 2 * margin, d, 1, seed=1)
    return synthetic.generate_scene(spec).mask


# ---------------------------------------------------------------- extract_runs

def test_runs_empty_mask():
    hist = sizing.extract_runs(np.zeros((5, 5), dtype=bool))
    assert hist.total_runs == 0


def test_runs_single_row():
    row = np.array([[0, 1, 1, 1, 0, 1]], dtype=bool)
    hist = sizing.extract_runs(row)
    assert hist.counts[3] == 1
    assert hist.counts[1] == 1
    assert hist.total_runs == 2


def test_runs_vertical_is_transpose():
    rng = np.random.default_rng(3)
    mask = rng.random((12, 17)) < 0.5
    v = sizing.extract_runs(mask, sizing.VERTICAL)
    ht = sizing.extract_runs(mask.T, sizing.HORIZONTAL)
    assert np.array_equal(
        np.pad(v.counts, (0, max(0, len(ht.counts) - len(v.counts)))),
        np.pad(ht.counts, (0, max(0, len(v.counts) - len(ht.counts)))),
    )


def test_runs_mass_identity():
    rng = np.random.default_rng(4)
    for _ in range(50):
        mask = rng.random((24, 24)) < rng.uniform(0.1, 0.9)
        hist = sizing.extract_runs(mask)
        lengths = np.arange(len(hist.counts))
        assert int((lengths * hist.counts).sum()) == int(mask.sum())


def test_runs_lone_disc_argmax_near_diameter():
    for d in (40, 60, 100):
        hist = sizing.extract_runs(lone_disc_mask(d))
        argmax = int(np.argmax(hist.counts))
        assert d - 2 <= argmax <= d


# ------------------------------------------------------- analytic distributions

def test_h_at_zero():
    assert sizing.analytic_h(60, 0) == 0.0


def test_h_345_triangle():
    assert sizing.analytic_h(5, 3) == pytest.approx(0.75)


def test_h_outside_domain():
    assert sizing.analytic_h(60, 61) == 0.0
    assert sizing.analytic_h(60, -1) == 0.0


def test_h_unbounded_at_d():
    with pytest.raises(ParameterError):
        sizing.analytic_h(60, 60)


def test_h_invalid_diameter():
    with pytest.raises(ParameterError):
        sizing.analytic_h(0, 1)


def test_g_single_term():
    assert sizing.analytic_g(61, 61, 30) == pytest.approx(sizing.analytic_h(61, 30))


def test_g_at_zero():
    assert sizing.analytic_g(61, 80, 0) == 0.0


def test_g_partial_terms():
    expected = sum(sizing.analytic_h(d, 70) for d in range(71, 81))
    assert sizing.analytic_g(61, 80, 70) == pytest.approx(expected)


def test_g_bad_range():
    with pytest.raises(ParameterError):
        sizing.analytic_g(10, 5, 3)


def test_h_matches_monte_carlo_chords():
    # ideal chord sampling: chord length at uniform height y is 2*sqrt(r^2-y^2)
    d = 60.0
    r = d / 2
    rng = np.random.default_rng(99)
    y = rng.uniform(-r, r, size=10_000)
    chords = np.sort(2.0 * np.sqrt(r * r - y * y))
    # reference CDF by trapezoid quadrature; sine-spaced grid concentrates
    # points near the integrable singularity at x = d
    theta = np.linspace(0.0, np.pi / 2 - 1e-4, 20_001)
    grid = d * np.sin(theta)
    dens = np.array([sizing.analytic_h(d, x) for x in grid])
    cdf = np.concatenate([[0.0], np.cumsum((dens[1:] + dens[:-1]) / 2 * np.diff(grid))])
    cdf /= cdf[-1]
    emp = np.arange(1, len(chords) + 1) / len(chords)
    ana = np.interp(chords, grid, cdf, right=1.0)
    ks = np.abs(emp - ana).max()
    assert ks < 0.05


# ----------------------------------------------------------------------- smooth

def test_smooth_spread_spike():
    counts = np.zeros(6)
    counts[5] = 11
    sh = sizing.smooth(counts, 11)
    assert np.allclose(sh.values[0:11], 1.0)
    assert np.allclose(sh.values[11:], 0.0)
    assert sh.x_max == 0


def test_smooth_window_one_identity():
    counts = np.array([0.0, 2, 5, 1])
    sh = sizing.smooth(counts, 1)
    assert np.allclose(sh.values[:4], counts)
    assert sh.x_max == 2


def test_smooth_mass_identity():
    # fixed divisor + zero padding: only sub-half-window bins lose mass,
    # bin i < half loses exactly counts[i] * (half - i)
    rng = np.random.default_rng(21)
    for _ in range(30):
        counts = rng.integers(0, 20, size=rng.integers(2, 40)).astype(float)
        window = int(rng.choice([3, 5, 11]))
        half = window // 2
        sh = sizing.smooth(counts + 1, window)  # +1 keeps it nonempty
        c = counts + 1
        lost = sum(c[i] * (half - i) for i in range(min(half, len(c))))
        # each count feeds `window` smoothing windows, minus those clipped at x<0
        assert sh.values.sum() * window == pytest.approx(window * c.sum() - lost)


def test_smooth_empty():
    with pytest.raises(EmptyHistogramError):
        sizing.smooth(np.zeros(10), 11)


def test_smooth_even_window():
    with pytest.raises(ParameterError):
        sizing.smooth(np.ones(10), 4)


def test_smooth_mixture_peak_at_63():
    g = sizing.sample_analytic_g(61, 80)
    sh = sizing.smooth(g, 11)
    assert sh.x_max == 63


# ------------------------------------------------------------ estimate_diameter

def test_estimate_spike():
    counts = np.zeros(11)
    counts[10] = 7.0
    sh = sizing.smooth(counts, 1)
    for alpha in (0.1, 0.5, 0.9):
        assert sizing.estimate_diameter(sh, alpha).diameter == 11


def test_estimate_mixture_near_true_mean():
    g = sizing.sample_analytic_g(61, 80)
    sh = sizing.smooth(g, 11)
    for alpha in (0.66, 0.7, 0.8):
        est = sizing.estimate_diameter(sh, alpha)
        assert 63 < est.diameter <= 81
        assert abs(est.diameter - 70.5) <= 6


def test_estimate_monotone_in_alpha():
    # raising alpha raises the crossing threshold, so the scan stops sooner:
    # the estimate is nonincreasing in alpha
    g = sizing.sample_analytic_g(61, 80)
    sh = sizing.smooth(g, 11)
    prev = None
    for alpha in np.linspace(0.1, 0.95, 18):
        d = sizing.estimate_diameter(sh, float(alpha)).diameter
        if prev is not None:
            assert d <= prev
        prev = d


def test_estimate_lone_disc_within_3():
    for d in range(20, 201, 15):
        hist = sizing.extract_runs(lone_disc_mask(d))
        est = sizing.estimate_diameter(sizing.smooth(hist, 11), 0.8)
        assert abs(est.diameter - d) <= 3, (d, est.diameter)


def test_estimate_zero_peak_degenerate():
    sh = sizing.SmoothedHistogram(
        values=np.zeros(5), window=1, x_max=0, peak=0.0, n_bins=4
    )
    with pytest.raises(DegenerateHistogramError):
        sizing.estimate_diameter(sh, 0.8)


def test_estimate_alpha_validation():
    sh = sizing.smooth(np.array([0.0, 1.0]), 1)
    for alpha in (0.0, 1.0, -0.5, 1.5):
        with pytest.raises(ParameterError):
            sizing.estimate_diameter(sh, alpha)


def test_estimate_invariant_diameter_gt_xmax():
    rng = np.random.default_rng(33)
    for _ in range(20):
        mask = rng.random((40, 40)) < 0.5
        hist = sizing.extract_runs(mask)
        if hist.total_runs == 0:
            continue
        sh = sizing.smooth(hist, 11)
        est = sizing.estimate_diameter(sh, 0.8)
        assert est.diameter > est.x_max


# -------------------------------------------------------------------------- csv

def test_raw_csv():
    hist = sizing.extract_runs(np.array([[0, 1, 1, 1, 0, 1]], dtype=bool))
    lines = sizing.raw_csv(hist).splitlines()
    assert lines[0] == "length,count"
    assert lines[1] == "1,1"
    assert lines[3] == "3,1"


def test_smoothed_csv_six_digits():
    sh = sizing.smooth(np.array([0.0, 3.0]), 3)
    lines = sizing.smoothed_csv(sh).splitlines()
    assert lines[0] == "length,value"
    assert lines[1] == "0,1.000000"
    assert lines[2] == "1,1.000000"
    assert lines[3] == "2,1.000000"
