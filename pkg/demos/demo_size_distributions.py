"""Chord-length distributions and the diameter estimator, step by step.

A horizontal scanline through a disc of diameter d produces a chord whose
length x is distributed with density proportional to x / sqrt(d^2 - x^2).
For a population of discs with diameters uniform on [d_min, d_max] the
run-length histogram approaches the mixture g(x) = sum of those densities.
This script prints the analytic mixture for d in [61, 80], smooths it with
the default window-11 mean filter, and shows how the alpha threshold turns
the smoothed curve into a single diameter estimate.

Run: python demos/demo_size_distributions.py
"""

import numpy as np

from objcount import estimate_diameter, sample_analytic_g, smooth


def sparkline(values, width=60):
    """Cheap text plot: one row of block characters."""
    blocks = " .:-=+*#%@"
    v = np.asarray(values, dtype=float)
    if len(v) > width:
        edges = np.linspace(0, len(v), width + 1).astype(int)
        v = np.array([v[a:b].max() if b > a else 0.0 for a, b in zip(edges, edges[1:])])
    scaled = (v / v.max() * (len(blocks) - 1)).astype(int)
    return "".join(blocks[s] for s in scaled)


def main():
    g = sample_analytic_g(61, 80)
    print("analytic mixture g(x) for diameters 61..80 (x = 0..80):")
    print(" ", sparkline(g))

    sh = smooth(g, 11)
    print("\nafter window-11 mean smoothing:")
    print(" ", sparkline(sh.values))
    print(f"  peak at x_max = {sh.x_max} with value {sh.peak:.3f}")

    print("\nalpha sweep (estimate = first x past the peak where the smoothed")
    print("curve drops to alpha * peak):")
    for alpha in (0.5, 0.66, 0.7, 0.8, 0.9):
        est = estimate_diameter(sh, alpha)
        print(f"  alpha={alpha:.2f}  ->  d_hat = {est.diameter}")
    print("\ntrue mean diameter is 70.5; note the estimate shrinks toward the")
    print("peak as alpha rises, because a higher threshold is crossed sooner.")


if __name__ == "__main__":
    main()
