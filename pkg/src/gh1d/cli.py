"""``gh1d`` command line."""
from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys

import numpy as np

from . import harness
from .bound_align import align_5_8, weak_align_2
from .core import PointSet1D, apply_isometry
from .exceptions import GH1DError
from .gh_exact import DEFAULT_CAP, gh, gh_approx
from .hausdorff import (FLIP, dh_iso, difference_set, directed_hausdorff, hausdorff,
                        translation_profile_values)
from .tight_family import generate

log = logging.getLogger("gh1d")

BRUTE_WARN = 5


def _num(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def _emit(args, pairs: dict) -> None:
    if args.json:
        json.dump({k: _num(v) for k, v in pairs.items()}, sys.stdout)
        sys.stdout.write("\n")
        return
    for k, v in pairs.items():
        if isinstance(v, float):
            v = format(v, ".12g")
        elif isinstance(v, bool):
            v = str(v).lower()
        print(k, v)


def _load_xy(args) -> tuple[PointSet1D, PointSet1D]:
    return harness.load_points(args.x, "x"), harness.load_points(args.y, "y")


def cmd_hausdorff(args):
    X, Y = _load_xy(args)
    if args.directed:
        return {"directed_hausdorff": directed_hausdorff(X, Y)}
    return {"hausdorff": hausdorff(X, Y)}


def _write_profile(path, X, Y, flip, step):
    Ym = apply_isometry(FLIP, Y) if flip else Y
    S = difference_set(X, Ym)
    grid = np.arange(S[0] - 1.0, S[-1] + 1.0 + 0.5 * step, step)
    vals = translation_profile_values(X, Ym, grid)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["delta", "value"])
        w.writerows([format(d, ".12g"), format(v, ".12g")] for d, v in zip(grid, vals))
    return grid.size


def cmd_iso(args):
    X, Y = _load_xy(args)
    T, value = dh_iso(X, Y, allow_flip=not args.no_flip)
    out = {"dh_iso": value, "sigma": T.sigma, "delta": T.delta}
    if args.profile:
        out["profile_points"] = _write_profile(args.profile, X, Y, T.is_flip, args.grid_step)
    return out


def cmd_gh(args):
    X, Y = _load_xy(args)
    if args.method == "brute" and max(len(X), len(Y)) > BRUTE_WARN:
        log.warning("exhaustive search on %d x %d points may be slow", len(X), len(Y))
    if args.method == "approx":
        iv = gh_approx(X, Y)
        return {"gh_lower": iv.lower, "gh_upper": iv.upper, "gh_estimate": iv.estimate}
    return {"gh": gh(X, Y, method=args.method, cap=args.cap).value}


def cmd_align(args):
    X, Y = _load_xy(args)
    C = harness.load_correspondence(args.corr)
    run = align_5_8 if args.method == "five-eighths" else weak_align_2
    rep = run(X, Y, C)
    return {"achieved": rep.achieved, "bound": rep.bound, "sigma": rep.T.sigma,
            "delta": rep.T.delta, "case": rep.case_fired.value,
            "used_fallback": rep.used_fallback}


def cmd_tight(args):
    inst = generate(args.k, args.delta, args.h)
    meta = {"generator": "tight", "k": args.k, "delta": inst.delta, "h": inst.h,
            "pairs": json.dumps([list(p) for p in inst.C.pairs])}
    harness.save_instance(args.out, harness.Instance(inst.X.tolist(), inst.Y.tolist(), meta))
    return {"eps": inst.eps, "expected_gh": inst.expected_gh,
            "expected_dhiso": inst.expected_dhiso, "dh_iso": dh_iso(inst.X, inst.Y).value}


def cmd_verify(args):
    rep = harness.verify_sweep(args.trials, args.n_max, args.m_max, args.seed, args.out,
                               kind=args.kind, workers=args.workers,
                               counterexample_dir=args.counterexamples)
    args.exit_code = 1 if rep.failures else 0
    return rep.summary()


def cmd_bench(args):
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    out = {}
    for row in harness.bench(sizes, args.seed):
        n = row["size"]
        out[f"hausdorff_s@{n}"] = row["hausdorff_s"]
        key = "candidate_pairs" if row["differences_counted"] else "candidate_pairs_bound"
        out[f"{key}@{n}"] = row["candidate_pairs"]
        out[f"translation_search_s@{n}"] = row["translation_search_s"]
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON object")
    xy = argparse.ArgumentParser(add_help=False)
    xy.add_argument("--x", required=True, help="points or instance file for X")
    xy.add_argument("--y", required=True, help="points or instance file for Y")

    p = argparse.ArgumentParser(prog="gh1d", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hausdorff", parents=[common, xy], help="Hausdorff distance")
    s.add_argument("--directed", action="store_true", help="sup over X of distance to Y")
    s.set_defaults(func=cmd_hausdorff)

    s = sub.add_parser("iso", parents=[common, xy], help="Hausdorff distance up to isometry")
    s.add_argument("--no-flip", action="store_true")
    s.add_argument("--profile", metavar="OUT.csv", help="write the translation profile")
    s.add_argument("--grid-step", type=float, default=1e-3)
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("gh", parents=[common, xy], help="Gromov-Hausdorff distance")
    s.add_argument("--method", choices=["brute", "monotone", "dp", "approx"], default="brute")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_gh)

    s = sub.add_parser("align", parents=[common, xy], help="constructive alignment")
    s.add_argument("--corr", required=True, help="correspondence file")
    s.add_argument("--method", choices=["five-eighths", "weak"], default="five-eighths")
    s.set_defaults(func=cmd_align)

    s = sub.add_parser("tight", parents=[common], help="write a tight-family instance")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--delta", type=float, default=1.0)
    s.add_argument("--h", type=float, default=None)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_tight)

    s = sub.add_parser("verify", parents=[common], help="randomized verification sweep")
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--n-max", type=int, default=harness.SWEEP_CAP)
    s.add_argument("--m-max", type=int, default=harness.SWEEP_CAP)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", default=None, help="CSV report path")
    s.add_argument("--kind", choices=harness.KINDS, default="uniform")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--counterexamples", default=None, metavar="DIR")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bench", parents=[common], help="timing and candidate counts")
    s.add_argument("--sizes", default="100,1000,10000")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    args.exit_code = 0
    try:
        _emit(args, args.func(args))
    except (GH1DError, OSError, ValueError, KeyError) as exc:
        print(f"gh1d: error: {exc}", file=sys.stderr)
        return 2
    return args.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
