"""The eight symmetries of a square grid, acting on cells and unit moves.

A symmetry is encoded in three booleans applied in a fixed order:
optionally swap x and y, then optionally flip each axis
(x -> N-1-x and/or y -> N-1-y).  Every symmetry of the square is
expressible exactly one way in this encoding, composition stays inside
the set of eight, and the action on an N x N grid is exact integer
arithmetic at any grid size.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

__all__ = [
    "Move",
    "DihedralOp",
    "IDENTITY",
    "TRANSPOSE",
    "ANTI_TRANSPOSE",
    "ROT90_CW",
    "ROT90_CCW",
    "ROT180",
    "MIRROR_V",
    "MIRROR_H",
    "ALL_OPS",
]


class Move(Enum):
    """Unit step between two adjacent grid cells (x grows right, y grows up)."""

    UP = (0, 1)
    DOWN = (0, -1)
    LEFT = (-1, 0)
    RIGHT = (1, 0)

    @property
    def vector(self) -> tuple[int, int]:
        return self.value

    @classmethod
    def from_vector(cls, dx: int, dy: int) -> "Move":
        for move in cls:
            if move.value == (dx, dy):
                return move
        raise ValueError(f"({dx}, {dy}) is not a unit step")

    @classmethod
    def from_arrow(cls, arrow: str) -> "Move":
        try:
            return _ARROWS[arrow]
        except KeyError:
            raise ValueError(f"unknown arrow {arrow!r}") from None

    @property
    def arrow(self) -> str:
        return {Move.UP: "↑", Move.DOWN: "↓", Move.LEFT: "←", Move.RIGHT: "→"}[self]


_ARROWS = {
    "↑": Move.UP,
    "↓": Move.DOWN,
    "←": Move.LEFT,
    "→": Move.RIGHT,
    "^": Move.UP,
    "v": Move.DOWN,
    "<": Move.LEFT,
    ">": Move.RIGHT,
}


@dataclass(frozen=True, slots=True)
class DihedralOp:
    """One of the 8 square symmetries: swap axes first, then flip each axis."""

    swap: bool = False
    flip_x: bool = False
    flip_y: bool = False

    def apply(self, cell: tuple[int, int], n: int) -> tuple[int, int]:
        """Map a cell of the N x N grid; raises if the cell is off-grid."""
        x, y = cell
        if not (0 <= x < n and 0 <= y < n):
            raise ValueError(f"cell {cell} outside the {n}x{n} grid")
        return self.apply_xy(x, y, n)

    def apply_xy(self, x, y, n):
        """Unchecked action; also works elementwise on numpy arrays."""
        if self.swap:
            x, y = y, x
        if self.flip_x:
            x = n - 1 - x
        if self.flip_y:
            y = n - 1 - y
        return x, y

    def apply_move(self, move: Move) -> Move:
        """Transform a unit step so that moving commutes with the symmetry."""
        dx, dy = move.vector
        if self.swap:
            dx, dy = dy, dx
        if self.flip_x:
            dx = -dx
        if self.flip_y:
            dy = -dy
        return Move.from_vector(dx, dy)

    def compose(self, other: "DihedralOp") -> "DihedralOp":
        """The symmetry equal to applying `other` first, then `self`.

        Flips recorded by `other` land on swapped axes whenever `self`
        swaps, which is what the axis relabeling below accounts for.
        """
        if self.swap:
            ofx, ofy = other.flip_y, other.flip_x
        else:
            ofx, ofy = other.flip_x, other.flip_y
        return DihedralOp(
            swap=self.swap ^ other.swap,
            flip_x=ofx ^ self.flip_x,
            flip_y=ofy ^ self.flip_y,
        )

    def inverse(self) -> "DihedralOp":
        for candidate in ALL_OPS:
            if self.compose(candidate) == IDENTITY:
                return candidate
        raise AssertionError("unreachable: every symmetry has an inverse")

    @property
    def name(self) -> str:
        return _NAMES[self]

    def __repr__(self) -> str:
        return f"<{self.name}>"


IDENTITY = DihedralOp()
TRANSPOSE = DihedralOp(swap=True)  # (x,y) -> (y,x), main diagonal
ANTI_TRANSPOSE = DihedralOp(swap=True, flip_x=True, flip_y=True)  # (x,y) -> (N-1-y, N-1-x)
ROT90_CW = DihedralOp(swap=True, flip_y=True)  # (x,y) -> (y, N-1-x)
ROT90_CCW = DihedralOp(swap=True, flip_x=True)  # (x,y) -> (N-1-y, x)
ROT180 = DihedralOp(flip_x=True, flip_y=True)
MIRROR_V = DihedralOp(flip_x=True)  # reflect across the vertical axis: x -> N-1-x
MIRROR_H = DihedralOp(flip_y=True)  # reflect across the horizontal axis: y -> N-1-y

ALL_OPS = (
    IDENTITY,
    TRANSPOSE,
    ANTI_TRANSPOSE,
    ROT90_CW,
    ROT90_CCW,
    ROT180,
    MIRROR_V,
    MIRROR_H,
)

_NAMES = {
    IDENTITY: "identity",
    TRANSPOSE: "transpose",
    ANTI_TRANSPOSE: "anti-transpose",
    ROT90_CW: "rot90-cw",
    ROT90_CCW: "rot90-ccw",
    ROT180: "rot180",
    MIRROR_V: "mirror-v",
    MIRROR_H: "mirror-h",
}
