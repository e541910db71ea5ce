"""Density sweep: how crowding degrades the diameter estimate.

Runs the built-in benchmark over several disc counts in a fixed frame and
reports, for each density, how many of the trials produced a diameter
estimate more than 3 pixels from the true value. Uses fewer trials than the
full benchmark so it finishes in a few seconds.

Run: python demos/demo_density_benchmark.py
"""

from objcount import SceneSpec, run_density_experiment


def main():
    template = SceneSpec(1000, 1000, 100, 0, seed=7)
    densities = [10, 50, 100, 150, 250]
    trials = 20
    print(f"{trials} trials per density, true diameter 100, tolerance 3 px\n")
    result = run_density_experiment(densities, trials, template, alpha=0.8)
    print("density  errors  error_rate")
    for density, n, errors in result.rows:
        bar = "#" * errors
        print(f"{density:7d}  {errors:6d}  {errors / n:9.2f}  {bar}")
    print("\nat low density every scanline histogram peaks near the true")
    print("diameter; as discs overlap, long merged runs fatten the tail and")
    print("the alpha-threshold crossing drifts upward.")


if __name__ == "__main__":
    main()
