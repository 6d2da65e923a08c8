"""Verification and measurement of scan orders.

Covers bijectivity/continuity reports, exhaustive enumeration of
rectangular clusters (rectangles whose cell indices form one contiguous
run), lifting of clusters to higher recursion orders, and a locality
metric counting how many contiguous index runs cover random query
rectangles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .curves import scan_at_side
from .errors import CapacityError
from .scan import ScanOrder

__all__ = [
    "VerificationReport",
    "ClusterRect",
    "ClusterReport",
    "LocalityStats",
    "verify_curve",
    "enumerate_clusters",
    "lift_cluster",
    "locality_benchmark",
]

MAX_CLUSTER_GRID_CELLS = 1 << 24


@dataclass(frozen=True, slots=True)
class VerificationReport:
    """What verify_curve found; violations are reported, never raised."""

    scan_name: str
    width: int
    height: int
    bijective: bool
    bijection_error: str | None
    continuity_checked: bool
    continuous: bool | None
    first_break: int | None
    entry: tuple[int, int]
    exit: tuple[int, int]

    @property
    def passed(self) -> bool:
        return self.bijective and (self.continuous is not False)

    def summary(self) -> str:
        parts = [
            f"{self.scan_name} ({self.width}x{self.height})",
            "bijective" if self.bijective else f"NOT bijective ({self.bijection_error})",
        ]
        if self.continuity_checked:
            if self.continuous:
                parts.append("continuous")
            else:
                parts.append(f"DISCONTINUOUS at step {self.first_break}->{self.first_break + 1}")
        parts.append(f"entry {self.entry}, exit {self.exit}")
        return "; ".join(parts)


def verify_curve(scan: ScanOrder, expect_continuity: bool = True) -> VerificationReport:
    """Report bijectivity, unit-step continuity (if expected) and the end cells."""
    xs, ys = scan.xs, scan.ys
    w, h = scan.width, scan.height
    bijective = True
    error = None
    in_range = (xs >= 0) & (xs < w) & (ys >= 0) & (ys < h)
    if not in_range.all():
        d = int(np.nonzero(~in_range)[0][0])
        bijective = False
        error = f"cell {scan.cell(d)} at index {d} is off-grid"
    else:
        counts = np.bincount(xs * h + ys, minlength=w * h)
        if not (counts == 1).all():
            key = int(np.nonzero(counts != 1)[0][0])
            bijective = False
            error = f"cell ({key // h}, {key % h}) visited {int(counts[key])} times"
    continuous = None
    first_break = None
    if expect_continuity:
        steps = np.abs(np.diff(xs)) + np.abs(np.diff(ys))
        breaks = np.nonzero(steps != 1)[0]
        continuous = breaks.size == 0
        if not continuous:
            first_break = int(breaks[0])
    return VerificationReport(
        scan_name=scan.name,
        width=w,
        height=h,
        bijective=bijective,
        bijection_error=error,
        continuity_checked=expect_continuity,
        continuous=continuous,
        first_break=first_break,
        entry=scan.cell(0),
        exit=scan.cell(len(scan) - 1),
    )


@dataclass(frozen=True, slots=True)
class ClusterRect:
    """Axis-aligned cell rectangle whose indices form one contiguous run."""

    x0: int
    y0: int
    x1: int
    y1: int
    min_index: int
    max_index: int

    @property
    def width(self) -> int:
        return self.x1 - self.x0 + 1

    @property
    def height(self) -> int:
        return self.y1 - self.y0 + 1

    @property
    def area(self) -> int:
        return self.width * self.height

    @property
    def is_cluster(self) -> bool:
        return self.max_index - self.min_index + 1 == self.area

    def csv_row(self) -> str:
        return f"{self.x0},{self.y0},{self.x1},{self.y1},{self.min_index},{self.max_index},{self.area}"


@dataclass(slots=True)
class ClusterReport:
    """All clusters of a scan up to the configured area cap."""

    scan_name: str
    width: int
    height: int
    max_area: int
    clusters: list[ClusterRect] = field(default_factory=list)

    def family_counts(self) -> dict[tuple[int, int], int]:
        """Cluster counts grouped by (width, height), sorted."""
        counts: dict[tuple[int, int], int] = {}
        for c in self.clusters:
            counts[(c.width, c.height)] = counts.get((c.width, c.height), 0) + 1
        return dict(sorted(counts.items()))

    def find(self, x0: int, y0: int, x1: int, y1: int) -> ClusterRect | None:
        for c in self.clusters:
            if (c.x0, c.y0, c.x1, c.y1) == (x0, y0, x1, y1):
                return c
        return None

    def to_csv(self) -> str:
        lines = ["x0,y0,x1,y1,min_index,max_index,area"]
        lines.extend(c.csv_row() for c in self.clusters)
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        lines = [
            f"{self.scan_name} ({self.width}x{self.height}), area cap {self.max_area}: "
            f"{len(self.clusters)} clusters"
        ]
        for (cw, ch), count in self.family_counts().items():
            lines.append(f"  {cw}x{ch} (area {cw * ch}): {count}")
        return "\n".join(lines)


def enumerate_clusters(scan: ScanOrder, max_area: int | None = None) -> ClusterReport:
    """Exhaustively list rectangles whose index span equals their area.

    Scans every rectangle, growing the column range while maintaining
    per-row index minima/maxima incrementally, then folding rows with
    running min/max; a rectangle qualifies exactly when
    max_index - min_index + 1 == area.
    """
    w, h = scan.width, scan.height
    if w * h > MAX_CLUSTER_GRID_CELLS:
        raise CapacityError(f"{w}x{h} grid exceeds the cluster-enumeration cap")
    if max_area is None:
        max_area = w * h
    max_area = int(max_area)
    if max_area < 1:
        raise ValueError("max_area must be >= 1")
    grid = scan.index_grid()
    if (grid < 0).any():
        raise ValueError("cluster enumeration requires a bijective scan")
    found: list[ClusterRect] = []
    heights = np.arange(1, h + 1, dtype=np.int64)
    for x0 in range(w):
        colmin = grid[x0].copy()
        colmax = grid[x0].copy()
        for x1 in range(x0, w):
            if x1 > x0:
                np.minimum(colmin, grid[x1], out=colmin)
                np.maximum(colmax, grid[x1], out=colmax)
            rect_w = x1 - x0 + 1
            tallest = max_area // rect_w
            if tallest < 1:
                break
            for y0 in range(h):
                ylim = min(h, y0 + tallest)
                if ylim <= y0:
                    break
                runmin = np.minimum.accumulate(colmin[y0:ylim])
                runmax = np.maximum.accumulate(colmax[y0:ylim])
                hits = np.nonzero(runmax - runmin + 1 == rect_w * heights[: ylim - y0])[0]
                for k in hits:
                    found.append(
                        ClusterRect(x0, y0, x1, y0 + int(k), int(runmin[k]), int(runmax[k]))
                    )
    found.sort(key=lambda c: (c.x0, c.y0, c.x1, c.y1))
    return ClusterReport(scan.name, w, h, max_area, found)


def lift_cluster(rect: ClusterRect, target_order: int, grid_factor: int = 4) -> ClusterRect:
    """Map an order-1 cluster to the covering block rectangle at a higher order.

    Each order-1 cell becomes an aligned block of grid_factor^(n-1) per
    side whose indices are one contiguous run of length
    (grid_factor^2)^(n-1), so the lifted rectangle is again a cluster
    with both bounds scaled by that run length.
    """
    if not rect.is_cluster:
        raise ValueError("rectangle is not a cluster (index span != area)")
    if target_order < 1:
        raise ValueError("target_order must be >= 1")
    side = grid_factor ** (target_order - 1)
    run = side * side
    return ClusterRect(
        x0=rect.x0 * side,
        y0=rect.y0 * side,
        x1=(rect.x1 + 1) * side - 1,
        y1=(rect.y1 + 1) * side - 1,
        min_index=rect.min_index * run,
        max_index=(rect.max_index + 1) * run - 1,
    )


@dataclass(slots=True)
class LocalityStats:
    """Contiguous-run statistics over seeded random query rectangles."""

    side: int
    samples: int
    seed: int
    mean_runs: dict[str, float] = field(default_factory=dict)
    max_runs: dict[str, int] = field(default_factory=dict)

    def to_csv(self) -> str:
        lines = ["scan,side,samples,seed,mean_runs,max_runs"]
        for name in self.mean_runs:
            lines.append(
                f"{name},{self.side},{self.samples},{self.seed},"
                f"{self.mean_runs[name]:.6f},{self.max_runs[name]}"
            )
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        lines = [f"locality over {self.samples} rectangles on a {self.side}x{self.side} grid (seed {self.seed})"]
        width = max(len(n) for n in self.mean_runs)
        for name in self.mean_runs:
            lines.append(
                f"  {name:<{width}}  mean runs {self.mean_runs[name]:8.3f}   max runs {self.max_runs[name]}"
            )
        return "\n".join(lines)


def count_runs(scan: ScanOrder, x0: int, y0: int, x1: int, y1: int) -> int:
    """Number of maximal contiguous index runs covering the rectangle."""
    sub = np.sort(scan.index_grid()[x0 : x1 + 1, y0 : y1 + 1], axis=None)
    return int(np.count_nonzero(np.diff(sub) > 1)) + 1


def locality_benchmark(scans, side: int, samples: int, seed: int) -> LocalityStats:
    """Mean/max contiguous index runs over seeded query rectangles.

    Scans may be ScanOrder objects (side x side) or curve names, which
    are built via scan_at_side.  Queries are sampled uniformly over all
    rectangles with both sides >= 2 and shared across scans, so results
    are comparable and reproducible from the seed.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    resolved: list[ScanOrder] = []
    for s in scans:
        if not isinstance(s, ScanOrder):
            s = scan_at_side(s, side)
        if (s.width, s.height) != (side, side):
            raise ValueError(f"scan {s.name} is {s.width}x{s.height}, expected {side}x{side}")
        resolved.append(s)
    rng = np.random.default_rng(seed)
    queries = []
    for _ in range(samples):
        xa, xb = sorted(rng.choice(side, size=2, replace=False))
        ya, yb = sorted(rng.choice(side, size=2, replace=False))
        queries.append((int(xa), int(ya), int(xb), int(yb)))
    stats = LocalityStats(side=side, samples=samples, seed=seed)
    for s in resolved:
        runs = [count_runs(s, x0, y0, x1, y1) for x0, y0, x1, y1 in queries]
        stats.mean_runs[s.name] = float(np.mean(runs))
        stats.max_runs[s.name] = int(max(runs))
    return stats
