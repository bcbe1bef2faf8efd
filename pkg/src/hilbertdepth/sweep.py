"""Coefficient-box sweeps checking hdepth against the known bounds.

Coefficient tuples are always ascending, ``(a_0, a_1, ..., a_n)``; for a
quadratic ``a j^2 + b j + e`` that is ``(e, b, a)``.
"""

from __future__ import annotations

import csv
import itertools
import json
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import IO, Iterable, Optional, Sequence

from . import cubic, quadratic
from .numfn import DEFAULT_CAP, CapExceeded, NumFnError, hdepth, validate

CAP_MARKER = "cap_exceeded"
EXHAUSTIVE_LIMIT = 2_000_000


@dataclass(frozen=True)
class SweepConfig:
    degree: int
    ranges: tuple[tuple[int, int], ...]  # inclusive, one per a_0..a_n
    filter: Optional[str] = None
    cap: int = DEFAULT_CAP
    workers: int = 1
    seed: Optional[int] = None
    samples: Optional[int] = None

    def __post_init__(self):
        if len(self.ranges) != self.degree + 1:
            raise ValueError(f"degree {self.degree} needs {self.degree + 1} ranges")
        if self.cap < 1:
            raise ValueError("cap must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @property
    def box_size(self) -> int:
        return math.prod(max(hi - lo + 1, 0) for lo, hi in self.ranges)


def quadratic_config(a=(1, 30), b=(-110, 110), e=(1, 30), **kw) -> SweepConfig:
    return SweepConfig(2, (tuple(e), tuple(b), tuple(a)), **kw)


def cubic_config(a=(1, 12), b=(-20, 20), c=(-20, 20), e=(1, 8), **kw) -> SweepConfig:
    return SweepConfig(3, (tuple(e), tuple(c), tuple(b), tuple(a)), **kw)


@dataclass(frozen=True)
class Row:
    coeffs: tuple[int, ...]
    hdepth: Optional[int]  # None when the cap was hit
    c_bound: int
    case: str
    bounds: tuple[int, ...]


@dataclass
class SweepSummary:
    degree: int
    total: int = 0
    valid: int = 0
    max_hdepth: int = -1
    argmax: Optional[tuple[int, ...]] = None
    per_case_max: dict = field(default_factory=dict)
    per_case_count: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    seed: Optional[int] = None
    mode: str = "exhaustive"

    def add(self, row: Row) -> None:
        self.valid += 1
        self.per_case_count[row.case] = self.per_case_count.get(row.case, 0) + 1
        if row.hdepth is None:
            self.violations.append((row.coeffs, CAP_MARKER, min(row.bounds, default=None)))
            return
        if row.hdepth > self.max_hdepth:
            self.max_hdepth, self.argmax = row.hdepth, row.coeffs
        self.per_case_max[row.case] = max(self.per_case_max.get(row.case, -1), row.hdepth)
        for b in row.bounds:
            if row.hdepth > b:
                self.violations.append((row.coeffs, row.hdepth, b))

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "mode": self.mode,
            "seed": self.seed,
            "total": self.total,
            "valid": self.valid,
            "max_hdepth": self.max_hdepth,
            "argmax": None if self.argmax is None else [str(c) for c in self.argmax],
            "per_case_max": dict(sorted(self.per_case_max.items())),
            "per_case_count": dict(sorted(self.per_case_count.items())),
            "violations": [
                {"coeffs": [str(c) for c in cs], "hdepth": hd, "claimed_bound": b}
                for cs, hd, b in self.violations
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def classify_coeffs(coeffs: Sequence[int]) -> tuple[str, tuple[int, ...]]:
    """Case label and the hdepth bounds claimed for it."""
    n = len(coeffs) - 1
    if n == 2:
        p = quadratic.QuadParams(coeffs[2], coeffs[1], coeffs[0])
        return quadratic.quad_case_label(p), (quadratic.bound_quadratic(p), 13)
    if n == 3:
        p = cubic.CubicParams(coeffs[3], coeffs[2], coeffs[1], coeffs[0])
        case = cubic.cubic_case(p)
        b = cubic.CASE_BOUNDS.get(case)
        return cubic.CASE_LABELS[case], (() if b is None else (b,))
    if all(c >= 0 for c in coeffs[1:]):
        return "nonneg_coeffs", (2 ** (n + 1),)
    return "mixed", ()


def evaluate_point(coeffs: Sequence[int], cap: int, case_filter: Optional[str] = None) -> Optional[Row]:
    """One grid point; ``None`` when the polynomial is invalid or filtered out."""
    if coeffs[-1] == 0:
        return None
    try:
        h = validate(coeffs)
    except NumFnError:
        return None
    case, bounds = classify_coeffs(h.coeffs)
    if case_filter is not None and case != case_filter:
        return None
    try:
        rep = hdepth(h, cap)
    except CapExceeded as exc:
        return Row(h.coeffs, None, exc.c_bound, case, bounds)
    return Row(h.coeffs, rep.hdepth, rep.c_bound, case, bounds)


def _run_chunk(args) -> list[Row]:
    points, cap, case_filter = args
    out = []
    for cs in points:
        row = evaluate_point(cs, cap, case_filter)
        if row is not None:
            out.append(row)
    return out


def _grid(cfg: SweepConfig) -> Iterable[tuple[int, ...]]:
    return itertools.product(*(range(lo, hi + 1) for lo, hi in cfg.ranges))


def _sample(cfg: SweepConfig, seed: int) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    n = cfg.samples if cfg.samples is not None else 10_000
    pts = {tuple(rng.randint(lo, hi) for lo, hi in cfg.ranges) for _ in range(n)}
    return sorted(pts)


def _chunks(points: Iterable[tuple[int, ...]], size: int):
    it = iter(points)
    while True:
        chunk = list(itertools.islice(it, size))
        if not chunk:
            return
        yield chunk


def run_sweep(cfg: SweepConfig, rows_out: Optional[list] = None, random_mode: bool = False) -> SweepSummary:
    """Evaluate every grid point (or a seeded sample) and merge in lexicographic order."""
    summary = SweepSummary(cfg.degree)
    if random_mode:
        summary.mode = "random"
        summary.seed = cfg.seed if cfg.seed is not None else 0
        points: Iterable = _sample(cfg, summary.seed)
        summary.total = len(points)
    else:
        summary.seed = cfg.seed
        points = _grid(cfg)
        summary.total = cfg.box_size
    jobs = ((chunk, cfg.cap, cfg.filter) for chunk in _chunks(points, 4096))
    if cfg.workers == 1:
        results = map(_run_chunk, jobs)
    else:
        pool = ProcessPoolExecutor(cfg.workers)
        # map() yields in submission order, which is the canonical order
        results = pool.map(_run_chunk, jobs)
    try:
        for rows in results:
            for row in rows:
                summary.add(row)
                if rows_out is not None:
                    rows_out.append(row)
    finally:
        if cfg.workers != 1:
            pool.shutdown()
    return summary


def sweep_quadratic(cfg: SweepConfig, rows_out: Optional[list] = None) -> SweepSummary:
    if cfg.degree != 2:
        raise ValueError("sweep_quadratic needs degree 2")
    return run_sweep(cfg, rows_out)


def sweep_cubic(cfg: SweepConfig, rows_out: Optional[list] = None) -> SweepSummary:
    if cfg.degree != 3:
        raise ValueError("sweep_cubic needs degree 3")
    return run_sweep(cfg, rows_out)


def explore_degree(n: int, cfg: SweepConfig, rows_out: Optional[list] = None) -> SweepSummary:
    """Empirical maximum of hdepth in degree ``n``: a lower bound for any uniform constant.

    Small boxes are enumerated; large ones (or any config with ``samples``)
    are sampled with a recorded seed.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    if cfg.degree != n:
        cfg = replace(cfg, degree=n)
    random_mode = cfg.samples is not None or cfg.box_size > EXHAUSTIVE_LIMIT
    return run_sweep(cfg, rows_out, random_mode=random_mode)


def write_csv(rows: Iterable[Row], degree: int, fh: IO[str]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow([f"a{i}" for i in range(degree + 1)] + ["hdepth", "c_bound", "case"])
    for r in rows:
        hd = CAP_MARKER if r.hdepth is None else r.hdepth
        w.writerow(list(r.coeffs) + [hd, r.c_bound, r.case])


def _parse_range(text: str) -> tuple[int, int]:
    sep = ".." if ".." in text else ","
    lo, _, hi = text.partition(sep)
    if not hi:
        v = int(lo)
        return v, v
    return int(lo.strip().strip("[")), int(hi.strip().strip("]"))


def parse_config(text: str) -> SweepConfig:
    """Read ``key = value`` lines; ranges are written ``a0 = 1..30`` or ``a0 = [1, 30]``."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, eq, val = line.partition("=")
        if not eq:
            raise ValueError(f"line {lineno}: expected key = value")
        values[key.strip()] = val.strip().strip('"')
    if "degree" not in values:
        raise ValueError("config needs a degree")
    degree = int(values.pop("degree"))
    ranges = []
    for i in range(degree + 1):
        key = f"a{i}"
        if key not in values:
            raise ValueError(f"config is missing range {key}")
        ranges.append(_parse_range(values.pop(key)))
    kw = {}
    for key in ("cap", "workers", "seed", "samples"):
        if key in values:
            kw[key] = int(values.pop(key))
    if "filter" in values:
        kw["filter"] = values.pop("filter")
    if values:
        raise ValueError(f"unknown config keys: {sorted(values)}")
    return SweepConfig(degree, tuple(ranges), **kw)
