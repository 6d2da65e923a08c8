"""Scan orders: sequences assigning one grid cell to each linear index."""

from __future__ import annotations

import json

import numpy as np

__all__ = ["ScanOrder"]


class ScanOrder:
    """A visiting order over a width x height grid.

    ``cells[d]`` is the (x, y) cell visited at step ``d``.  The container
    itself only requires one entry per index; whether the order is a true
    bijection (every cell exactly once) is checked by
    :func:`sfckit.analysis.verify_curve`, which reports violations instead
    of raising.  Instances are immutable after construction.
    """

    __slots__ = ("width", "height", "cells", "name", "_grid")

    def __init__(self, width: int, height: int, cells, name: str = "scan"):
        if width < 1 or height < 1:
            raise ValueError("grid dimensions must be positive")
        arr = np.array(cells, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("cells must be a sequence of (x, y) pairs")
        if arr.shape[0] != width * height:
            raise ValueError(
                f"expected {width * height} cells for a {width}x{height} grid, got {arr.shape[0]}"
            )
        arr.setflags(write=False)
        self.width = width
        self.height = height
        self.cells = arr
        self.name = name
        self._grid = None

    @property
    def n(self) -> int:
        return self.width * self.height

    def __len__(self) -> int:
        return self.n

    @property
    def xs(self) -> np.ndarray:
        return self.cells[:, 0]

    @property
    def ys(self) -> np.ndarray:
        return self.cells[:, 1]

    def cell(self, d: int) -> tuple[int, int]:
        """Cell visited at step d."""
        if not 0 <= d < self.n:
            raise ValueError(f"index {d} outside [0, {self.n})")
        x, y = self.cells[d]
        return int(x), int(y)

    def index_grid(self) -> np.ndarray:
        """Array D with D[x, y] = index visiting cell (x, y); -1 if never visited."""
        if self._grid is None:
            grid = np.full((self.width, self.height), -1, dtype=np.int64)
            xs, ys = self.xs, self.ys
            ok = (xs >= 0) & (xs < self.width) & (ys >= 0) & (ys < self.height)
            grid[xs[ok], ys[ok]] = np.nonzero(ok)[0]
            grid.setflags(write=False)
            self._grid = grid
        return self._grid

    def index_of(self, x: int, y: int) -> int:
        """Step at which cell (x, y) is visited."""
        if not (0 <= x < self.width and 0 <= y < self.height):
            raise ValueError(f"cell ({x}, {y}) outside the {self.width}x{self.height} grid")
        d = int(self.index_grid()[x, y])
        if d < 0:
            raise ValueError(f"cell ({x}, {y}) is never visited")
        return d

    def to_csv(self) -> str:
        """CSV listing with header ``d,x,y``."""
        lines = ["d,x,y"]
        lines.extend(f"{d},{x},{y}" for d, (x, y) in enumerate(self.cells))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        """JSON array of [x, y] pairs in visiting order."""
        return json.dumps([[int(x), int(y)] for x, y in self.cells], separators=(",", ":"))

    def __repr__(self) -> str:
        return f"ScanOrder({self.name!r}, {self.width}x{self.height})"
