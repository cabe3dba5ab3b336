"""Independent exact reference used to validate frozen expected values.

Written the dumbest possible way -- fractions.Fraction end to end, no code
shared with segclip.oracle (which scales to big integers internally).
"""

from fractions import Fraction


def frac_orientation(p1, p2, corner):
    """Exact value of the corner orientation cross product."""
    x1, y1 = map(Fraction, p1)
    x2, y2 = map(Fraction, p2)
    cx, cy = map(Fraction, corner)
    return (cx - x2) * (y1 - cy) - (cy - y2) * (x1 - cx)


def frac_clip(seg, window):
    """Exact closed-window clip of the parametric segment.

    Returns None or ((ax, ay), (bx, by)) as Fractions.
    """
    (x1, y1), (x2, y2) = seg
    x1, y1, x2, y2 = map(Fraction, (x1, y1, x2, y2))
    xl, xr, yb, yt = map(Fraction, window)
    dx = x2 - x1
    dy = y2 - y1
    lo = Fraction(0)
    hi = Fraction(1)
    for p, q in ((-dx, x1 - xl), (dx, xr - x1), (-dy, y1 - yb), (dy, yt - y1)):
        if p == 0:
            if q < 0:
                return None
        else:
            r = q / p
            if p < 0:
                lo = max(lo, r)
            else:
                hi = min(hi, r)
    if lo > hi:
        return None
    return ((x1 + dx * lo, y1 + dy * lo), (x1 + dx * hi, y1 + dy * hi))
