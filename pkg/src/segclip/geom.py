"""Shared geometry types, window validation, and the segment text format.

Coordinates are double-precision floats.  All value types are immutable;
the only mutable object is :class:`Counters`, which a caller creates per
clipping context (one per thread when clipping concurrently).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional


class Point(NamedTuple):
    """Immutable 2D point (world units)."""

    x: float
    y: float


class Segment(NamedTuple):
    """Ordered endpoint pair (a, b); zero length (a == b) is legal."""

    a: Point
    b: Point


class Window(NamedTuple):
    """Axis-aligned clipping rectangle: x_left < x_right, y_bottom < y_top."""

    x_left: float
    x_right: float
    y_bottom: float
    y_top: float

    def extent(self) -> float:
        """Larger of width and height."""
        return max(self.x_right - self.x_left, self.y_top - self.y_bottom)

    def corners(self) -> tuple[Point, Point, Point, Point]:
        """The four corner points: BL, BR, TL, TR."""
        xl, xr, yb, yt = self
        return (Point(xl, yb), Point(xr, yb), Point(xl, yt), Point(xr, yt))


# A clipper either rejects a segment outright (None) or accepts a possibly
# degenerate clipped segment.
ClipResult = Optional[Segment]


@dataclass(slots=True)
class Counters:
    """Instrumentation record threaded through every clipper call.

    divisions               -- coordinate divisions performed
    intersections_computed  -- boundary intersection points materialized
    predicate_evals         -- sign tests / outcodes / parametric boundary
                               checks evaluated, depending on the algorithm

    Counts only ever increase; create a fresh instance per measurement.
    """

    divisions: int = 0
    intersections_computed: int = 0
    predicate_evals: int = 0


class DegenerateWindowError(ValueError):
    """Window bounds are inverted or empty."""


class NonFiniteError(ValueError):
    """A coordinate is NaN or infinite."""


class SegmentFormatError(ValueError):
    """A segment file line could not be parsed."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def validate_window(w: Window) -> Window:
    """Return w unchanged, or raise for non-finite or inverted bounds."""
    if not (math.isfinite(w[0]) and math.isfinite(w[1])
            and math.isfinite(w[2]) and math.isfinite(w[3])):
        raise NonFiniteError(f"window bounds must be finite: {w!r}")
    if not (w[0] < w[1] and w[2] < w[3]):
        raise DegenerateWindowError(
            f"window requires x_left < x_right and y_bottom < y_top: {w!r}")
    return w


def window_contains(p: Point, w: Window, ulps: int = 4) -> bool:
    """Closed-window containment with a small floating-point allowance.

    The allowance is `ulps` units in the last place measured at the window's
    coordinate scale per axis (measuring at the boundary value itself would
    make the allowance vacuous for a boundary at 0).
    """
    xl, xr, yb, yt = w
    sx = ulps * math.ulp(max(abs(xl), abs(xr)))
    sy = ulps * math.ulp(max(abs(yb), abs(yt)))
    return xl - sx <= p[0] <= xr + sx and yb - sy <= p[1] <= yt + sy


# --- segment text format ----------------------------------------------------
#
# One segment per line: four whitespace-separated decimal reals `x1 y1 x2 y2`.
# Lines whose first non-blank character is `#` are comments; blank lines are
# ignored.  Files are UTF-8.

def format_coord(v: float) -> str:
    """Fixed 9-significant-digit rendering, stable under reparsing."""
    return format(float(v), ".9g")


def segment_line(s: Segment) -> str:
    (x1, y1), (x2, y2) = s
    return (f"{format_coord(x1)} {format_coord(y1)} "
            f"{format_coord(x2)} {format_coord(y2)}")


def _parse_real(token: str, line_number: int) -> float:
    try:
        v = float(token)
    except ValueError:
        raise SegmentFormatError(line_number, f"not a number: {token!r}") from None
    if not math.isfinite(v):
        raise SegmentFormatError(line_number, f"coordinate must be finite: {token!r}")
    return v


def parse_segments(lines: Iterable[str]) -> list[Segment]:
    """Parse the segment text format; raises SegmentFormatError with a 1-based
    line number on the first malformed line."""
    segments = []
    for line_number, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 4:
            raise SegmentFormatError(
                line_number, f"expected 4 coordinates, got {len(tokens)}")
        x1, y1, x2, y2 = (_parse_real(t, line_number) for t in tokens)
        segments.append(Segment(Point(x1, y1), Point(x2, y2)))
    return segments


def read_segments(path) -> list[Segment]:
    with open(path, encoding="utf-8") as f:
        return parse_segments(f)


def write_segments(path, segments: Iterable[Segment]) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for s in segments:
            f.write(segment_line(s))
            f.write("\n")
