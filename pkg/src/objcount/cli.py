"""Command-line interface.

Subcommands: count, histogram, bench, generate. stdout carries only the
machine-readable payload (JSON or CSV); diagnostics go to stderr. Exit
codes: 0 success, 1 I/O error, 2 configuration error, 3 pipeline error.
"""

import argparse
import sys

from . import counting, enhance, imgio, segmentation, sizing, synthetic
from .errors import (
    DegenerateHistogramError,
    EmptyHistogramError,
    MalformedImageError,
    ParameterError,
    PipelineError,
    UnsupportedImageError,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONFIG = 2
EXIT_PIPELINE = 3

CONFIG_KEYS = {
    "alpha", "median_window", "smooth_window", "direction",
    "method", "polarity", "rg_tolerance", "rg_seed_threshold",
}


def _fail(code: int, message: str) -> int:
    print(f"objcount: {message}", file=sys.stderr)
    return code


def _read_config_file(path) -> dict:
    """Simple key=value file; blank lines and '#' comments allowed."""
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ParameterError(f"{path}:{lineno}: expected key=value")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in CONFIG_KEYS:
                raise ParameterError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value.strip()
    return values


def _build_pipeline_config(args) -> counting.PipelineConfig:
    """Merge config-file values with flags; flags win."""
    base = _read_config_file(args.config) if args.config else {}

    def pick(name, flag_value, cast):
        if flag_value is not None:
            return cast(flag_value)
        if name in base:
            try:
                return cast(base[name])
            except ValueError as e:
                raise ParameterError(f"bad config value for {name}: {e}") from None
        return None

    seg_kwargs = {}
    for name, cast in (("method", str), ("polarity", str),
                       ("rg_tolerance", int), ("rg_seed_threshold", int)):
        v = pick(name, getattr(args, name, None), cast)
        if v is not None:
            seg_kwargs[name] = v
    cfg_kwargs = {"segmentation": segmentation.SegmentationConfig(**seg_kwargs)}
    for name, cast in (("alpha", float), ("median_window", int),
                       ("smooth_window", int), ("direction", str)):
        v = pick(name, getattr(args, name, None), cast)
        if v is not None:
            cfg_kwargs[name] = v
    cfg = counting.PipelineConfig(**cfg_kwargs)
    cfg.validate()
    return cfg


def _parse_size(text: str):
    try:
        w, _, h = text.lower().partition("x")
        width, height = int(w), int(h)
    except ValueError:
        raise ParameterError(f"bad --size {text!r}, expected WxH") from None
    return width, height


def _parse_diameter(args):
    if args.diameter_range:
        try:
            lo, _, hi = args.diameter_range.partition(",")
            return (int(lo), int(hi))
        except ValueError:
            raise ParameterError(
                f"bad --diameter-range {args.diameter_range!r}, expected LO,HI"
            ) from None
    return args.diameter


def cmd_count(args) -> int:
    cfg = _build_pipeline_config(args)
    img = imgio.load_gray(args.image)
    result = counting.run_pipeline(img, cfg)
    print(result.to_json())
    return EXIT_OK


def cmd_histogram(args) -> int:
    cfg = _build_pipeline_config(args)
    img = imgio.load_gray(args.image)
    try:
        mask = segmentation.segment(img, cfg.segmentation)
    except DegenerateHistogramError as e:
        print("length,count" if args.raw else "length,value")
        return _fail(EXIT_PIPELINE, f"stage 1 (segmentation): {e}")
    mask = enhance.median_filter(mask, cfg.median_window)
    hist = sizing.extract_runs(mask, cfg.direction)
    if hist.total_runs == 0:
        print("length,count" if args.raw else "length,value")
        return _fail(EXIT_PIPELINE, "stage 3 (sizing): histogram has no runs")
    if args.raw:
        sys.stdout.write(sizing.raw_csv(hist))
    else:
        sys.stdout.write(sizing.smoothed_csv(sizing.smooth(hist, cfg.smooth_window)))
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.trials < 1:
        raise ParameterError("trials must be >=1")
    try:
        densities = [int(d) for d in args.densities.split(",") if d != ""]
    except ValueError:
        raise ParameterError(f"bad --densities {args.densities!r}") from None
    if not densities:
        raise ParameterError("no densities given")
    width, height = _parse_size(args.size)
    template = synthetic.SceneSpec(
        width=width,
        height=height,
        disc_diameter=_parse_diameter(args),
        n_discs=0,
        seed=args.seed,
    )
    result = synthetic.run_density_experiment(
        densities,
        args.trials,
        template,
        alpha=args.alpha,
        tolerance=args.tolerance,
    )
    sys.stdout.write(result.to_csv())
    return EXIT_OK


def cmd_generate(args) -> int:
    width, height = _parse_size(args.size)
    spec = synthetic.SceneSpec(
        width=width,
        height=height,
        disc_diameter=_parse_diameter(args),
        n_discs=args.n,
        seed=args.seed,
    )
    truth = synthetic.generate_scene(spec)
    imgio.save_mask(truth.mask, args.out)
    print(
        f"wrote {args.out}: {truth.n_discs} discs, occupancy {truth.occupancy:.4f}, "
        f"overlap {truth.overlap:.4f}",
        file=sys.stderr,
    )
    return EXIT_OK


def _add_pipeline_flags(p):
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--median-window", dest="median_window", type=int, default=None)
    p.add_argument("--smooth-window", dest="smooth_window", type=int, default=None)
    p.add_argument("--direction", choices=["horizontal", "vertical"], default=None)
    p.add_argument("--method", choices=["otsu", "region_growing"], default=None)
    p.add_argument("--polarity", choices=["bright_objects", "dark_objects"],
                   default=None)
    p.add_argument("--rg-tolerance", dest="rg_tolerance", type=int, default=None)
    p.add_argument("--rg-seed-threshold", dest="rg_seed_threshold", type=int,
                   default=None)
    p.add_argument("--config", default=None, help="key=value config file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="objcount",
        description="Statistical object counting for round, similarly sized objects",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count objects in an image, JSON on stdout")
    p.add_argument("image")
    _add_pipeline_flags(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("histogram", help="run-length histogram CSV on stdout")
    p.add_argument("image")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--raw", action="store_true")
    group.add_argument("--smoothed", dest="raw", action="store_false")
    p.set_defaults(raw=True)
    _add_pipeline_flags(p)
    p.set_defaults(func=cmd_histogram)

    p = sub.add_parser("bench", help="density-sweep benchmark CSV on stdout")
    p.add_argument("--densities", default="10,50,100,150")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--diameter", type=int, default=100)
    p.add_argument("--diameter-range", dest="diameter_range", default=None)
    p.add_argument("--size", default="1000x1000")
    p.add_argument("--alpha", type=float, default=0.8)
    p.add_argument("--tolerance", type=int, default=3)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("generate", help="write a synthetic disc-scene PGM")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diameter", type=int, default=100)
    p.add_argument("--diameter-range", dest="diameter_range", default=None)
    p.add_argument("--size", default="1000x1000")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as e:
        return _fail(EXIT_CONFIG, str(e))
    except (FileNotFoundError, PermissionError, IsADirectoryError, OSError) as e:
        return _fail(EXIT_IO, str(e))
    except (MalformedImageError, UnsupportedImageError) as e:
        return _fail(EXIT_IO, str(e))
    except PipelineError as e:
        return _fail(EXIT_PIPELINE, str(e))
    except EmptyHistogramError as e:
        return _fail(EXIT_PIPELINE, str(e))


if __name__ == "__main__":
    sys.exit(main())
