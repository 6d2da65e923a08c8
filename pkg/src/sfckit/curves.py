"""Uniform index <-> cell interface for curves and grid scans.

Space-filling curves (Aztec, Hilbert, Peano) are evaluated digit-wise in
O(order) per query from precomputed per-orientation slot tables, or
materialized in full via the grammar engine.  Raster, serpentine and
diagonal zig-zag scans work on arbitrary W x H rectangles in closed form.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

import numpy as np

from . import grammar
from .dihedral import IDENTITY, DihedralOp
from .errors import CapacityError
from .grammar import MAX_INDEX, MAX_MATERIALIZED_CELLS, GrammarSpec
from .scan import ScanOrder

__all__ = [
    "CurveId",
    "d2xy",
    "xy2d",
    "path",
    "subsampled_scan",
    "scan_at_side",
]


class CurveId(Enum):
    """The scan orders this package knows how to build."""

    AZTEC = "aztec"
    HILBERT = "hilbert"
    PEANO = "peano"
    RASTER_V = "raster-v"
    RASTER_H = "raster-h"
    SERPENTINE = "serpentine"
    ZIGZAG = "zigzag"

    @classmethod
    def from_name(cls, name) -> "CurveId":
        if isinstance(name, CurveId):
            return name
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            valid = ", ".join(c.value for c in cls)
            raise ValueError(f"unknown curve {name!r} (expected one of: {valid})") from None

    @property
    def is_sfc(self) -> bool:
        return self in _GRAMMARS

    @property
    def grammar_spec(self) -> GrammarSpec | None:
        return _GRAMMARS.get(self)


_GRAMMARS = {
    CurveId.AZTEC: grammar.AZTEC,
    CurveId.HILBERT: grammar.HILBERT,
    CurveId.PEANO: grammar.PEANO,
}


def _dims(curve: CurveId, order_or_dims) -> tuple[int, int]:
    """Grid dimensions for a scan-order curve given a side or (W, H) pair."""
    if isinstance(order_or_dims, tuple):
        w, h = order_or_dims
    else:
        w = h = order_or_dims
    w, h = int(w), int(h)
    if w < 1 or h < 1:
        raise ValueError(f"invalid dimensions {w}x{h} for {curve.value}")
    return w, h


def _sfc_order(curve: CurveId, order_or_dims) -> tuple[GrammarSpec, int, int]:
    spec = curve.grammar_spec
    if isinstance(order_or_dims, tuple):
        raise ValueError(f"{curve.value} takes a recursion order, not grid dimensions")
    order = int(order_or_dims)
    if order < 1:
        raise ValueError("order must be >= 1")
    b = spec.grid_factor
    total = (b * b) ** order
    if total > MAX_INDEX:
        raise CapacityError(f"{curve.value} order {order} exceeds the 63-bit index range")
    return spec, order, total


class _SlotTable:
    """Per-orientation lookup: tour rank -> (child cell, child orientation), and its inverse."""

    __slots__ = ("cells", "orientations", "rank_of")

    def __init__(self, prod: grammar.Production):
        self.cells = prod.cells
        self.orientations = prod.orientations
        self.rank_of = {cell: j for j, cell in enumerate(prod.cells)}


@lru_cache(maxsize=None)
def _slot_tables(spec: GrammarSpec) -> dict[DihedralOp, _SlotTable]:
    return {op: _SlotTable(prod) for op, prod in grammar.derived_productions(spec).items()}


def d2xy(curve, order_or_dims, d: int) -> tuple[int, int]:
    """Cell visited at step d.

    Space-filling curves walk one base-b^2 digit of d per recursion
    level, tracking the orientation handed down to each child, so no
    path is materialized.
    """
    curve = CurveId.from_name(curve)
    d = int(d)
    if curve.is_sfc:
        spec, order, total = _sfc_order(curve, order_or_dims)
        if not 0 <= d < total:
            raise ValueError(f"index {d} outside [0, {total})")
        tables = _slot_tables(spec)
        b = spec.grid_factor
        x = y = 0
        op = IDENTITY
        for k in range(order - 1, -1, -1):
            j = (d // (b * b) ** k) % (b * b)
            table = tables[op]
            cx, cy = table.cells[j]
            side = b**k
            x += cx * side
            y += cy * side
            op = table.orientations[j]
        return x, y
    w, h = _dims(curve, order_or_dims)
    if not 0 <= d < w * h:
        raise ValueError(f"index {d} outside [0, {w * h})")
    if curve is CurveId.RASTER_V:
        return d // h, d % h
    if curve is CurveId.RASTER_H:
        return d % w, d // w
    if curve is CurveId.SERPENTINE:
        x, r = divmod(d, h)
        return x, r if x % 2 == 0 else h - 1 - r
    return _zigzag_d2xy(w, h, d)


def xy2d(curve, order_or_dims, cell) -> int:
    """Step at which the cell is visited; inverse of :func:`d2xy`."""
    curve = CurveId.from_name(curve)
    x, y = int(cell[0]), int(cell[1])
    if curve.is_sfc:
        spec, order, _total = _sfc_order(curve, order_or_dims)
        b = spec.grid_factor
        side = b**order
        if not (0 <= x < side and 0 <= y < side):
            raise ValueError(f"cell ({x}, {y}) outside the {side}x{side} grid")
        tables = _slot_tables(spec)
        d = 0
        op = IDENTITY
        for k in range(order - 1, -1, -1):
            s = b**k
            table = tables[op]
            j = table.rank_of[((x // s) % b, (y // s) % b)]
            d += j * (b * b) ** k
            op = table.orientations[j]
        return d
    w, h = _dims(curve, order_or_dims)
    if not (0 <= x < w and 0 <= y < h):
        raise ValueError(f"cell ({x}, {y}) outside the {w}x{h} grid")
    if curve is CurveId.RASTER_V:
        return x * h + y
    if curve is CurveId.RASTER_H:
        return y * w + x
    if curve is CurveId.SERPENTINE:
        return x * h + (y if x % 2 == 0 else h - 1 - y)
    return _zigzag_xy2d(w, h, x, y)


def _zigzag_span(w: int, h: int, s: int) -> tuple[int, int]:
    """Range of x on the anti-diagonal x + y = s."""
    return max(0, s - (h - 1)), min(s, w - 1)


def _zigzag_d2xy(w: int, h: int, d: int) -> tuple[int, int]:
    # Anti-diagonals in increasing x+y; x ascends on even diagonals,
    # descends on odd ones (the sweep starts along x).
    s = 0
    remaining = d
    while True:
        lo, hi = _zigzag_span(w, h, s)
        length = hi - lo + 1
        if remaining < length:
            break
        remaining -= length
        s += 1
    x = lo + remaining if s % 2 == 0 else hi - remaining
    return x, s - x


def _zigzag_xy2d(w: int, h: int, x: int, y: int) -> int:
    s = x + y
    before = 0
    for t in range(s):
        lo, hi = _zigzag_span(w, h, t)
        before += hi - lo + 1
    lo, hi = _zigzag_span(w, h, s)
    return before + (x - lo if s % 2 == 0 else hi - x)


def path(curve, order_or_dims) -> ScanOrder:
    """Materialize the full scan order.

    For space-filling curves this is the grammar expansion; grid scans
    are built directly.
    """
    curve = CurveId.from_name(curve)
    if curve.is_sfc:
        spec, order, total = _sfc_order(curve, order_or_dims)
        if total > MAX_MATERIALIZED_CELLS:
            raise CapacityError(
                f"{curve.value} order {order} has {total} cells; cap is {MAX_MATERIALIZED_CELLS}"
            )
        return grammar.expand(spec, IDENTITY, order)
    w, h = _dims(curve, order_or_dims)
    if w * h > MAX_MATERIALIZED_CELLS:
        raise CapacityError(f"{w}x{h} grid exceeds the materialization cap")
    d = np.arange(w * h, dtype=np.int64)
    if curve is CurveId.RASTER_V:
        cells = np.column_stack([d // h, d % h])
    elif curve is CurveId.RASTER_H:
        cells = np.column_stack([d % w, d // w])
    elif curve is CurveId.SERPENTINE:
        x, r = d // h, d % h
        cells = np.column_stack([x, np.where(x % 2 == 0, r, h - 1 - r)])
    else:
        xx, yy = np.meshgrid(np.arange(w, dtype=np.int64), np.arange(h, dtype=np.int64), indexing="ij")
        x, y = xx.ravel(), yy.ravel()
        s = x + y
        tie = np.where(s % 2 == 0, x, -x)
        order_idx = np.lexsort((tie, s))
        cells = np.column_stack([x[order_idx], y[order_idx]])
    return ScanOrder(w, h, cells, name=f"{curve.value}-{w}x{h}")


def subsampled_scan(curve, native_side: int, target_side: int) -> ScanOrder:
    """Scan order on a coarser grid induced by walking the native curve.

    The native path is walked cell by cell; each native cell maps to the
    k x k macro cell containing it (k = native_side / target_side) and
    the first visit of each macro cell fixes its position in the output,
    which is therefore a bijection on the target grid.
    """
    curve = CurveId.from_name(curve)
    native_side = int(native_side)
    target_side = int(target_side)
    if target_side < 1 or native_side % target_side != 0:
        raise ValueError(f"native side {native_side} is not a multiple of target side {target_side}")
    k = native_side // target_side
    native = path(curve, _native_arg(curve, native_side))
    tx = native.xs // k
    ty = native.ys // k
    _, first = np.unique(tx * target_side + ty, return_index=True)
    first.sort()
    cells = np.column_stack([tx[first], ty[first]])
    return ScanOrder(target_side, target_side, cells, name=f"{curve.value}-{native_side}to{target_side}")


def _native_arg(curve: CurveId, side: int):
    """Translate a grid side into path()'s argument, checking SFC sides are exact powers."""
    if not curve.is_sfc:
        return side
    b = curve.grammar_spec.grid_factor
    order = 0
    n = 1
    while n < side:
        n *= b
        order += 1
    if n != side or order < 1:
        raise ValueError(f"{curve.value} has no native {side}x{side} grid (side must be a power of {b})")
    return order


def scan_at_side(curve, side: int) -> ScanOrder:
    """Scan order for the curve on a side x side grid, subsampling when needed.

    Space-filling curves are built natively when the side is a power of
    their grid factor and otherwise subsampled from the smallest native
    grid the requested side divides; grid scans are built directly.  The
    scan is named after the curve so downstream reports stay stable.
    """
    curve = CurveId.from_name(curve)
    side = int(side)
    if side < 1:
        raise ValueError("side must be >= 1")
    if not curve.is_sfc:
        scan = path(curve, side)
    else:
        b = curve.grammar_spec.grid_factor
        native = 1
        order = 0
        while True:
            native *= b
            order += 1
            if native % side == 0:
                break
            if native * native > MAX_MATERIALIZED_CELLS:
                raise ValueError(f"{curve.value} cannot cover a {side}x{side} grid by subsampling")
        scan = subsampled_scan(curve, native, side) if native != side else path(curve, order)
    return ScanOrder(scan.width, scan.height, scan.cells, name=curve.value)
