"""Timing harness: average total execution time per clipper and relative ratios.

Each pass clips one freshly generated seeded corpus; every registered clipper
sees the same corpus within a pass, and a different corpus is used in each
pass.  A monotonic clock wraps the whole corpus pass (per-segment timing at
size 10 would mostly measure the clock).  Corpus generation and I/O stay
outside the timed region.  An order-independent checksum over the accepted
output coordinates, rounded to 6 decimals, both keeps the timed work
observable and catches any cross-algorithm output disagreement; the rounding
absorbs the sub-tolerance coordinate differences the algorithms may
legitimately produce.
"""

from __future__ import annotations

import csv
import gc
import io
import time
from dataclasses import dataclass

from .baselines import ClipperId, get_clipper, registered_clippers
from .geom import Counters, Segment, Window
from .oracle import DEFAULT_WINDOW, GeneratorSpec, default_region, gen_segments

DEFAULT_SIZES = (10, 100, 1_000, 10_000, 100_000, 1_000_000)
PAPER_SCALE_SIZES = DEFAULT_SIZES + (10_000_000,)

# Relative total execution times of the original C++ implementations
# (11th-gen i5-1135G7, average over 100 iterations).  Used only for
# side-by-side display; local measurements are expected to differ.
REFERENCE_RATIOS = {
    ClipperId.LIANG_BARSKY.value: {
        10: 1.3665, 100: 1.2745, 1_000: 1.4713, 10_000: 1.4241,
        100_000: 1.4357, 1_000_000: 1.4472, 10_000_000: 1.4452,
        "average": 1.4092,
    },
    ClipperId.COHEN_SUTHERLAND.value: {
        10: 1.2919, 100: 1.1884, 1_000: 1.2266, 10_000: 1.1833,
        100_000: 1.1860, 1_000_000: 1.1945, 10_000_000: 1.1941,
        "average": 1.2092,
    },
}

CSV_FIELDS = ("size", "clipper", "avg_total_ms", "ratio_vs_quadclip", "checksum")


@dataclass(frozen=True)
class BenchConfig:
    sizes: tuple[int, ...] = DEFAULT_SIZES
    iterations: int = 10
    seed: int = 1
    window: Window = DEFAULT_WINDOW
    region: Window = default_region()


@dataclass(frozen=True)
class BenchRow:
    size: int
    clipper: str
    avg_total_ms: float
    ratio_vs_quadclip: float
    checksum: float


def relative_execution(benchmark_avg_ms: float, proposed_avg_ms: float) -> float:
    """Benchmark time over proposed time; > 1 favors the proposed clipper."""
    if proposed_avg_ms == 0:
        raise ZeroDivisionError("proposed average execution time is zero")
    return benchmark_avg_ms / proposed_avg_ms


def pass_seed(base_seed: int, size: int, pass_index: int) -> int:
    """Seed of the corpus for one (size, pass); pass 0 is the warmup."""
    return (base_seed * 1_000_003 + size) * 1_009 + pass_index


def checksum_segments(segments) -> float:
    """Order-independent sum of coordinates, each rounded to 6 decimals."""
    micro = 0
    for (ax, ay), (bx, by) in segments:
        micro += (round(ax * 1e6) + round(ay * 1e6)
                  + round(bx * 1e6) + round(by * 1e6))
    return micro / 1e6


def time_algorithm(clipper, segments: list[Segment], w: Window) -> tuple[float, float]:
    """One timed pass of `clipper` over `segments`.

    Returns (total wall-clock milliseconds, checksum of accepted output).
    """
    clip = get_clipper(clipper)
    counters = Counters()
    accepted: list[Segment] = []
    append = accepted.append
    # cycle collection pauses would land on whichever clipper happens to be
    # running; keep them out of the timed region
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter()
        for s in segments:
            r = clip(s, w, counters)
            if r is not None:
                append(r)
        elapsed_ms = (time.perf_counter() - start) * 1e3
    finally:
        if gc_was_enabled:
            gc.enable()
    return elapsed_ms, checksum_segments(accepted)


def run_suite(config: BenchConfig) -> list[BenchRow]:
    """Full comparison: per size, one discarded warmup pass plus
    `config.iterations` measured passes over fresh corpora.

    Raises RuntimeError if the clippers ever disagree on a pass checksum.
    Row order: size ascending, then registry order; the quadclip row's ratio
    is 1.0 by construction.
    """
    if not config.sizes or any(s <= 0 for s in config.sizes):
        raise ValueError(f"sizes must be positive: {config.sizes}")
    if list(config.sizes) != sorted(config.sizes):
        raise ValueError(f"sizes must be ascending: {config.sizes}")
    if config.iterations < 1:
        raise ValueError(f"iterations must be >= 1: {config.iterations}")

    clippers = registered_clippers()
    quad = ClipperId.QUADCLIP.value
    rows: list[BenchRow] = []
    for size in config.sizes:
        totals = {cid: 0.0 for cid in clippers}
        checksums = {cid: 0.0 for cid in clippers}
        for pass_index in range(config.iterations + 1):
            spec = GeneratorSpec(pass_seed(config.seed, size, pass_index),
                                 size, config.region)
            corpus = gen_segments(spec)
            gc.collect()  # settle allocation debt from generation
            for (_, _), (_, _) in corpus:  # touch the fresh corpus so the
                pass                       # first clipper to run is not
            pass_checksums = {}            # billed for cold caches
            for cid in clippers:
                ms, ck = time_algorithm(cid, corpus, config.window)
                pass_checksums[cid] = ck
                if pass_index > 0:  # pass 0 is warmup
                    totals[cid] += ms
                    checksums[cid] += ck
            if len(set(pass_checksums.values())) != 1:
                raise RuntimeError(
                    f"clipper outputs disagree at size {size}, "
                    f"pass {pass_index}: {pass_checksums}")
        quad_avg = totals[quad] / config.iterations
        for cid in clippers:
            avg = totals[cid] / config.iterations
            rows.append(BenchRow(
                size=size,
                clipper=cid,
                avg_total_ms=avg,
                ratio_vs_quadclip=relative_execution(avg, quad_avg),
                checksum=checksums[cid],
            ))
    return rows


def rows_to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in rows:
        writer.writerow([r.size, r.clipper, f"{r.avg_total_ms:.6f}",
                         f"{r.ratio_vs_quadclip:.4f}", f"{r.checksum:.6f}"])
    return buf.getvalue()


def write_csv(rows: list[BenchRow], path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(rows_to_csv(rows))


def format_table(rows: list[BenchRow]) -> str:
    """Human-readable summary with the reference ratios alongside."""
    lines = [f"{'size':>9}  {'clipper':<9} {'avg_ms':>12} {'ratio':>8} {'reference':>9}"]
    for r in rows:
        ref = REFERENCE_RATIOS.get(r.clipper, {}).get(r.size)
        ref_text = f"{ref:9.4f}" if ref is not None else f"{'-':>9}"
        lines.append(f"{r.size:>9}  {r.clipper:<9} {r.avg_total_ms:>12.3f} "
                     f"{r.ratio_vs_quadclip:>8.4f} {ref_text}")
    return "\n".join(lines)
