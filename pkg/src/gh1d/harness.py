"""Seeded instance generation, file formats, verification sweeps and benchmarks."""
from __future__ import annotations

import csv
import json
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .bound_align import (align_5_8, check_double_crossing_lemma, check_wide_crossing_lemma,
                          double_crossing_edges, standardize, weak_align_2)
from .core import ATOL, Correspondence, PointSet1D, make_point_set
from .exceptions import BoundViolation, InstanceTooLarge, InvalidCoordinate
from .gh_exact import DEFAULT_CAP, gh_bruteforce, gh_dp_notes, min_distortion_monotone
from .hausdorff import candidate_count, dh_iso, hausdorff, min_hausdorff_translation

log = logging.getLogger(__name__)

KINDS = ("uniform", "clustered", "lattice")
SWEEP_CAP = 5

COLUMNS = ["trial_id", "seed", "n", "m", "d_h", "d_hiso", "flip_used", "d_gh_brute",
           "dist_monotone", "dp_value", "ratio", "align58_achieved", "align58_bound",
           "weak_achieved", "lemma_violations", "sandwich_ok",
           # extras beyond the core report
           "dp_gap", "monotone_gap", "align58_fallback", "hard_fail"]


@dataclass
class Instance:
    x: list
    y: list
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ("x", "y"):
            vals = getattr(self, name)
            if not vals:
                raise ValueError(f"instance list {name!r} is empty")
            if not all(math.isfinite(v) for v in vals):
                raise InvalidCoordinate(f"instance list {name!r} has non-finite values")
        self.meta = {str(k): str(v) for k, v in self.meta.items()}

    @property
    def X(self) -> PointSet1D:
        return make_point_set(self.x)

    @property
    def Y(self) -> PointSet1D:
        return make_point_set(self.y)

    def to_json(self) -> dict:
        return {"x": list(self.x), "y": list(self.y), "meta": dict(self.meta)}

    @classmethod
    def from_json(cls, doc: dict) -> Instance:
        return cls([float(v) for v in doc["x"]], [float(v) for v in doc["y"]],
                   dict(doc.get("meta", {})))


def random_instance(n: int, m: int, seed: int, kind: str = "uniform",
                    jitter: Optional[float] = None) -> Instance:
    """Deterministic random instance; duplicate coordinates are dropped.

    ``uniform`` draws i.i.d. on [0, 1]. ``clustered`` splits each set between
    [0, 0.3] and [0.7, 1]. ``lattice`` perturbs ``linspace(0, 1, n)`` by
    Gaussian noise of scale ``jitter`` (default ``0.1 / n``).
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    rng = np.random.default_rng(seed)

    def draw(k):
        if kind == "uniform":
            return rng.random(k)
        if kind == "clustered":
            side = rng.integers(0, 2, k)
            return np.where(side == 1, 0.7, 0.0) + 0.3 * rng.random(k)
        if kind == "lattice":
            scale = 0.1 / k if jitter is None else jitter
            return np.linspace(0.0, 1.0, k) + scale * rng.standard_normal(k)
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")

    X, Y = make_point_set(draw(n)), make_point_set(draw(m))
    return Instance(X.tolist(), Y.tolist(), {"generator": kind, "seed": seed, "n": n, "m": m})


# --------------------------------------------------------------------------
# files


def _read_json(path) -> dict:
    with open(path) as fh:
        return json.load(fh)


def load_points(path, key: str = "points") -> PointSet1D:
    """Read ``{"points": [...]}``; an instance file yields its ``key`` list instead."""
    doc = _read_json(path)
    if "points" in doc:
        return make_point_set(doc["points"])
    if key in doc:
        return make_point_set(doc[key])
    raise ValueError(f"{path}: expected a 'points' list or an instance with {key!r}")


def save_points(path, P) -> None:
    with open(path, "w") as fh:
        json.dump({"points": list(P)}, fh)


def load_instance(path) -> Instance:
    return Instance.from_json(_read_json(path))


def save_instance(path, inst: Instance) -> None:
    with open(path, "w") as fh:
        json.dump(inst.to_json(), fh, indent=1)


def load_correspondence(path) -> Correspondence:
    return Correspondence.from_pairs(_read_json(path)["pairs"])


def save_correspondence(path, C: Correspondence) -> None:
    with open(path, "w") as fh:
        json.dump({"pairs": [list(p) for p in C.pairs]}, fh)


# --------------------------------------------------------------------------
# verification sweep


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def lemma_violations(X: PointSet1D, Y: PointSet1D, C: Correspondence,
                     atol: float = ATOL) -> int:
    """Failed double-crossing checks plus a failed wide-crossing check, if any."""
    SC = standardize(X, Y, C, atol=atol)
    bad = sum(not check_double_crossing_lemma(SC, e, atol).all for e in double_crossing_edges(SC))
    if check_wide_crossing_lemma(SC, atol) is False:
        bad += 1
    return bad


def evaluate_instance(X: PointSet1D, Y: PointSet1D, cap: int = DEFAULT_CAP,
                      atol: float = ATOL) -> dict:
    """Every sweep column except the trial bookkeeping, for one instance."""
    d_h = hausdorff(X, Y)
    T, d_hiso = dh_iso(X, Y, atol=atol)
    brute = gh_bruteforce(X, Y, cap=cap)
    d_gh = brute.value
    mono, _ = min_distortion_monotone(X, Y, cap=cap)
    dp = gh_dp_notes(X, Y)
    sandwich_ok = d_gh <= d_hiso + atol and d_hiso <= 1.25 * d_gh + atol

    hard = not sandwich_ok
    try:
        a = align_5_8(X, Y, brute.witness, atol=atol)
        a_val, a_bound, a_fb = a.achieved, a.bound, a.used_fallback
        hard |= a_val > a_bound + atol
    except BoundViolation:
        a_val, a_bound, a_fb = math.nan, 1.25 * d_gh, True
        hard = True
    try:
        w = weak_align_2(X, Y, brute.witness, atol=atol)
        w_val = w.achieved
        hard |= w_val > w.bound + atol
    except BoundViolation:
        w_val, hard = math.nan, True
    lem = lemma_violations(X, Y, brute.witness, atol)
    hard |= lem > 0

    return {
        "n": len(X), "m": len(Y),
        "d_h": d_h, "d_hiso": d_hiso, "flip_used": T.is_flip, "d_gh_brute": d_gh,
        "dist_monotone": mono, "dp_value": dp,
        "ratio": d_hiso / d_gh if d_gh > 0 else math.nan,
        "align58_achieved": a_val, "align58_bound": a_bound, "weak_achieved": w_val,
        "lemma_violations": lem, "sandwich_ok": sandwich_ok,
        "dp_gap": dp - d_gh, "monotone_gap": mono / 2 - d_gh,
        "align58_fallback": a_fb, "hard_fail": hard,
    }


def sweep_trial(trial_id: int, master_seed: int, n_max: int, m_max: int,
                kind: str = "uniform", atol: float = ATOL):
    """One row of the verification sweep, plus the instance it was built from."""
    seed = master_seed ^ trial_id
    sizes = np.random.default_rng([seed, 1])
    n = int(sizes.integers(1, n_max + 1))
    m = int(sizes.integers(1, m_max + 1))
    inst = random_instance(n, m, seed, kind)
    row = {"trial_id": trial_id, "seed": seed}
    row.update(evaluate_instance(inst.X, inst.Y, cap=max(n_max, m_max), atol=atol))
    return row, inst


def _trial_star(args):
    return sweep_trial(*args)


@dataclass
class SweepReport:
    rows: list

    @property
    def failures(self) -> list:
        return [r for r in self.rows if r["hard_fail"]]

    @property
    def sandwich_violations(self) -> int:
        return sum(not r["sandwich_ok"] for r in self.rows)

    @property
    def lemma_violation_total(self) -> int:
        return sum(r["lemma_violations"] for r in self.rows)

    @property
    def monotone_equality_rate(self) -> float:
        eq = sum(abs(r["monotone_gap"]) <= ATOL for r in self.rows)
        return eq / len(self.rows) if self.rows else math.nan

    @property
    def dp_gaps(self) -> np.ndarray:
        return np.array([r["dp_gap"] for r in self.rows])

    @property
    def fallback_rate(self) -> float:
        return sum(r["align58_fallback"] for r in self.rows) / len(self.rows) if self.rows else 0.0

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(COLUMNS)
            for r in self.rows:
                w.writerow([_fmt(r[c]) for c in COLUMNS])

    def summary(self) -> dict:
        gaps = self.dp_gaps
        return {
            "trials": len(self.rows),
            "hard_failures": len(self.failures),
            "sandwich_violations": self.sandwich_violations,
            "lemma_violations": self.lemma_violation_total,
            "align58_fallback_rate": self.fallback_rate,
            "monotone_equality_rate": self.monotone_equality_rate,
            "dp_gap_min": float(gaps.min()) if gaps.size else math.nan,
            "dp_gap_median": float(np.median(gaps)) if gaps.size else math.nan,
            "dp_gap_max": float(gaps.max()) if gaps.size else math.nan,
            "dp_below_exact": int((gaps < -ATOL).sum()),
            "max_ratio": float(np.nanmax([r["ratio"] for r in self.rows] + [math.nan]))
            if self.rows else math.nan,
        }


def verify_sweep(trials: int, n_max: int, m_max: int, seed: int, out_path=None,
                 kind: str = "uniform", workers: int = 1, counterexample_dir=None,
                 atol: float = ATOL) -> SweepReport:
    """Run ``trials`` seeded trials; trial ``t`` uses seed ``seed ^ t``.

    Instances whose monotone optimum misses the exact ``d_GH`` are written to
    ``counterexample_dir`` when it is given.
    """
    if max(n_max, m_max) > DEFAULT_CAP:
        raise InstanceTooLarge(f"sweeps are limited to {DEFAULT_CAP} points per side")
    args = [(t, seed, n_max, m_max, kind, atol) for t in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_trial_star, args, chunksize=64))
    else:
        results = [sweep_trial(*a) for a in args]
    report = SweepReport([row for row, _ in results])
    if counterexample_dir is not None:
        cdir = Path(counterexample_dir)
        for row, inst in results:
            if row["monotone_gap"] > atol:
                cdir.mkdir(parents=True, exist_ok=True)
                inst.meta.update(trial_id=str(row["trial_id"]),
                                 d_gh_brute=_fmt(row["d_gh_brute"]),
                                 dist_monotone=_fmt(row["dist_monotone"]))
                save_instance(cdir / f"monotone_trial_{row['trial_id']}.json", inst)
    if out_path is not None:
        report.to_csv(out_path)
    for r in report.failures:
        log.error("trial %d (seed %d) failed a hard check", r["trial_id"], r["seed"])
    return report


# --------------------------------------------------------------------------
# benchmark


def _timed(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(sizes, seed: int = 0, max_iso_pairs: int = 1_000_000, repeat: int = 3) -> list[dict]:
    """Timing of the merge-scan Hausdorff distance and of the translation search.

    ``candidate_pairs`` counts midpoint pairs of the difference set; its
    distinct differences are counted while ``n * m <= 10**7`` and otherwise
    bounded by ``nm``. The translation search (threshold sweep)
    is timed only while ``n * m <= max_iso_pairs``.
    """
    rows = []
    for n in sizes:
        inst = random_instance(n, n, seed)
        X, Y = inst.X, inst.Y
        nm = len(X) * len(Y)
        row = {"size": n, "hausdorff_s": _timed(lambda: hausdorff(X, Y), repeat)}
        if nm <= 10 ** 7:
            row["candidate_pairs"], row["differences_counted"] = candidate_count(X, Y), True
        else:
            row["candidate_pairs"], row["differences_counted"] = nm * (nm + 1) // 2, False
        if nm <= max_iso_pairs:
            row["translation_search_s"] = _timed(
                lambda: min_hausdorff_translation(X, Y, method="sweep"), 1)
        else:
            row["translation_search_s"] = math.nan
        rows.append(row)
    return rows
