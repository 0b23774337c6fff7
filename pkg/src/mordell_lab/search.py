"""Exhaustive integral point search on Mordell curves y^2 = x^3 + k.

The enumeration is exact: candidate square roots may be seeded from
float64 square roots inside a proven-safe int64 window, but every
reported point is verified with arbitrary-precision integer arithmetic,
and outside the safe window the scan falls back to `math.isqrt`.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import NamedTuple

import numpy as np

from .intutil import PreconditionError, icbrt, is_perfect_square

__all__ = [
    "MordellCurve",
    "IntegralPoint",
    "SearchWindow",
    "integral_points",
    "count_points",
    "classify_multiples",
    "is_perfect_square",
]

DEFAULT_WINDOW = (-(10**6), 10**6)

# x**3 + k stays well inside int64 under these limits
_FAST_XMAX = 10**6
_FAST_KMAX = 10**17


@dataclass(frozen=True)
class MordellCurve:
    """The curve y^2 = x^3 + k; disc is the Weierstrass discriminant."""

    k: int

    def __post_init__(self):
        if self.k == 0:
            raise PreconditionError("k must be nonzero")

    @property
    def disc(self) -> int:
        return -432 * self.k * self.k


class IntegralPoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class SearchWindow:
    x_min: int
    x_max: int

    def __post_init__(self):
        if self.x_min > self.x_max:
            raise PreconditionError("empty window: x_min > x_max")


def _scan_exact(k: int, lo: int, hi: int) -> list[tuple[int, int]]:
    """Pure big-integer scan; returns nonnegative-y representatives."""
    out = []
    for x in range(lo, hi + 1):
        r = is_perfect_square(x * x * x + k)
        if r is not None:
            out.append((x, r))
    return out


def _scan_int64(k: int, lo: int, hi: int) -> list[tuple[int, int]]:
    """Vectorized scan; float sqrt seeds candidates, int64 math verifies."""
    out = []
    chunk = 1 << 20
    x = lo
    while x <= hi:
        top = min(x + chunk - 1, hi)
        xs = np.arange(x, top + 1, dtype=np.int64)
        v = xs * xs * xs + k
        keep = v >= 0
        xs, v = xs[keep], v[keep]
        if v.size:
            r = np.sqrt(v.astype(np.float64)).astype(np.int64)
            for cand in (r - 1, r, r + 1):
                hit = cand * cand == v
                for xi, ri in zip(xs[hit], cand[hit]):
                    if ri >= 0:
                        out.append((int(xi), int(ri)))
        x = top + 1
    return sorted(set(out))


@lru_cache(maxsize=1024)
def _points_nonneg_y(k: int, x_min: int, x_max: int, threads: int = 1) -> tuple[tuple[int, int], ...]:
    """All (x, y) with y >= 0, y*y == x**3 + k, x in [x_min, x_max]."""
    # x**3 + k < 0 can never be a square: clip the window exactly
    lo = max(x_min, icbrt(-k) if k <= 0 else -icbrt(k) - 1)
    hi = x_max
    if lo > hi:
        return ()
    fast = abs(x_min) <= _FAST_XMAX and abs(x_max) <= _FAST_XMAX and abs(k) <= _FAST_KMAX
    scan = _scan_int64 if fast else _scan_exact
    if threads > 1:
        step = max(1, (hi - lo + 1) // threads)
        ranges = [(max(lo, i), min(hi, i + step - 1)) for i in range(lo, hi + 1, step)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(lambda r: scan(k, r[0], r[1]), ranges)
        found = sorted(set(p for part in parts for p in part))
    else:
        found = sorted(set(scan(k, lo, hi)))
    for x, y in found:
        assert y * y == x * x * x + k
    return tuple(found)


def integral_points(
    curve: MordellCurve | int,
    window: SearchWindow | tuple[int, int] = DEFAULT_WINDOW,
    threads: int = 1,
) -> list[IntegralPoint]:
    """All integral points with x in the window, sorted by (x, y).

    Both signs of y are listed; y = 0 appears once.  The window choice is
    the caller's completeness obligation and is echoed by the CLI.
    """
    k = curve.k if isinstance(curve, MordellCurve) else MordellCurve(curve).k
    if not isinstance(window, SearchWindow):
        window = SearchWindow(*window)
    pts: list[IntegralPoint] = []
    for x, y in _points_nonneg_y(k, window.x_min, window.x_max, threads):
        if y == 0:
            pts.append(IntegralPoint(x, 0))
        else:
            pts.append(IntegralPoint(x, -y))
            pts.append(IntegralPoint(x, y))
    return sorted(pts)


def count_points(
    curve: MordellCurve | int,
    window: SearchWindow | tuple[int, int] = DEFAULT_WINDOW,
    include_infinity: bool = False,
    threads: int = 1,
) -> int:
    """N(E) over the window, optionally counting the point at infinity."""
    return len(integral_points(curve, window, threads)) + (1 if include_infinity else 0)


def classify_multiples(
    m: int,
    k_range: tuple[int, int],
    include_infinity: bool = False,
    window: SearchWindow | tuple[int, int] = DEFAULT_WINDOW,
    threads: int = 1,
) -> list[int]:
    """All k in k_range (k != 0) whose point count equals m * |k|, ascending."""
    if m < 1:
        raise PreconditionError("m must be >= 1")
    k_lo, k_hi = k_range
    if k_lo > k_hi:
        raise PreconditionError("empty k range")
    out = []
    for k in range(k_lo, k_hi + 1):
        if k == 0:
            continue
        if count_points(k, window, include_infinity, threads) == m * abs(k):
            out.append(k)
    return out
