"""Exhaustive verification that every admissible (braid, slope) pair fibres.

Rows come out in lexicographic order of ``(n, b, t, p, q)`` regardless of how
many worker processes are used.  ``KFK_THREADS`` caps the worker count.
"""

from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .braid import BraidParams, knot_params, relator
from .brown import brown_criterion
from .errors import ZeroWeight
from .fibration import localization_violations, weight_for_slope
from .slope import Slope

CSV_HEADER = ("n", "b", "t", "p", "q", "wx", "wy", "max_pos", "min_pos", "fibred")


@dataclass(frozen=True)
class SweepRow:
    n: int
    b: int
    t: int
    p: int
    q: int
    wx: int
    wy: int
    max_pos: tuple[int, ...]
    min_pos: tuple[int, ...]
    fibred: bool
    localization: tuple[str, ...] = ()

    def csv_fields(self) -> list[str]:
        return [
            str(self.n), str(self.b), str(self.t), str(self.p), str(self.q),
            str(self.wx), str(self.wy),
            ";".join(map(str, self.max_pos)),
            ";".join(map(str, self.min_pos)),
            "true" if self.fibred else "false",
        ]


@dataclass
class SweepReport:
    rows: list[SweepRow] = field(default_factory=list)
    knots: int = 0
    skipped_zero_weight: int = 0

    @property
    def falsifications(self) -> list[SweepRow]:
        return [r for r in self.rows if not r.fibred]

    @property
    def mixed_sign_rows(self) -> list[SweepRow]:
        return [r for r in self.rows if r.wx < 0 < r.wy]

    @property
    def localization_failures(self) -> list[SweepRow]:
        return [r for r in self.rows if r.localization]


def admissible_slopes(n: int, max_slope: int):
    """Slopes ``(p, q)`` with ``1 <= p <= max_slope``, ``|q| <= max_slope``,
    ``gcd(p, q) = gcd(p, n) = 1``, in lexicographic order."""
    for p in range(1, max_slope + 1):
        if math.gcd(p, n) != 1:
            continue
        for q in range(-max_slope, max_slope + 1):
            if math.gcd(p, q) == 1:
                yield Slope(p, q)


def sweep_knot(params: BraidParams, max_slope: int) -> tuple[list[SweepRow], int]:
    """Rows for one braid, plus the number of slopes skipped for a zero weight."""
    word = relator(params)
    rows = []
    skipped = 0
    for r in admissible_slopes(params.n, max_slope):
        try:
            hom = weight_for_slope(params, r)
        except ZeroWeight:
            skipped += 1
            continue
        verdict = brown_criterion(word, hom)
        loc = ()
        if hom.wx < 0 < hom.wy:
            loc = tuple(localization_violations(params, verdict))
        rows.append(SweepRow(
            params.n, params.b, params.t, r.p, r.q, hom.wx, hom.wy,
            verdict.max_positions, verdict.min_positions, verdict.kernel_fg, loc,
        ))
    return rows, skipped


def _worker_count(threads: int | None) -> int:
    cap = os.environ.get("KFK_THREADS")
    if threads is None:
        threads = int(cap) if cap else 1
    elif cap:
        threads = min(threads, int(cap))
    return max(1, threads)


def _sweep_knot_args(args):
    return sweep_knot(*args)


def run_sweep(max_n: int, max_slope: int, threads: int | None = None) -> SweepReport:
    knots = list(knot_params(max_n))
    jobs = [(k, max_slope) for k in knots]
    workers = _worker_count(threads)
    if workers == 1:
        results = [sweep_knot(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map preserves submission order
            results = list(pool.map(_sweep_knot_args, jobs, chunksize=8))
    report = SweepReport(knots=len(knots))
    for rows, skipped in results:
        report.rows.extend(rows)
        report.skipped_zero_weight += skipped
    return report


def write_csv(rows, fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())


def to_csv(rows) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()
