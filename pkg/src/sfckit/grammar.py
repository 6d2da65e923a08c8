"""Grammar engine for square-grid space-filling curves.

A curve is described by a single base production: a tour of the b x b
child grid (``cells``), one square symmetry per tour slot telling how the
pattern recurses into that child (``orientations``), and the unit move
between consecutive children (``moves``).  The productions for the other
orientations are derived from the base one with dihedral algebra, and
expansion rewrites the tour ``order`` times, yielding a path over the
(b^order)^2 grid.

Three curves ship built in: the Aztec curve (b = 4), whose tour climbs
the left edge, crosses the top, and spirals back through the interior
before exiting along the bottom edge; the Hilbert curve (b = 2); and the
Peano curve (b = 3).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dihedral import (
    ALL_OPS,
    ANTI_TRANSPOSE,
    IDENTITY,
    MIRROR_H,
    MIRROR_V,
    ROT180,
    TRANSPOSE,
    DihedralOp,
    Move,
)
from .errors import CapacityError
from .scan import ScanOrder

__all__ = [
    "Production",
    "GrammarSpec",
    "ValidationVerdict",
    "production_from_arrows",
    "derive_production",
    "derived_productions",
    "expand",
    "validate",
    "AZTEC",
    "HILBERT",
    "PEANO",
    "AZTEC_A",
    "AZTEC_B",
    "AZTEC_C",
    "AZTEC_D",
    "MAX_MATERIALIZED_CELLS",
    "MAX_INDEX",
]

# Paths are materialized as numpy arrays; cap the cell count well below
# memory limits.  Index arithmetic (d2xy/xy2d in sfckit.curves) supports
# indices up to 2^63 - 1 without materializing anything.
MAX_MATERIALIZED_CELLS = 1 << 28
MAX_INDEX = (1 << 63) - 1


@dataclass(frozen=True, slots=True)
class Production:
    """One rewriting step: a tour of the b x b grid of children.

    ``cells[j]`` is the j-th child visited, ``orientations[j]`` the
    symmetry applied to the pattern placed there, and ``moves[j]`` the
    unit step from child j to child j+1.  Instances are plain data;
    :func:`validate` checks the tour invariants and reports violations
    rather than raising, so invalid productions are constructible.
    """

    grid_factor: int
    cells: tuple[tuple[int, int], ...]
    orientations: tuple[DihedralOp, ...]
    moves: tuple[Move, ...]


@dataclass(frozen=True, slots=True)
class GrammarSpec:
    """A named curve grammar: its base production plus entry/exit corners."""

    name: str
    base: Production

    @property
    def grid_factor(self) -> int:
        return self.base.grid_factor

    @property
    def entry_cell(self) -> tuple[int, int]:
        return self.base.cells[0]

    @property
    def exit_cell(self) -> tuple[int, int]:
        return self.base.cells[-1]


def production_from_arrows(
    grid_factor: int,
    orientations: tuple[DihedralOp, ...],
    arrows: str,
    start: tuple[int, int] = (0, 0),
) -> Production:
    """Build a production by walking the arrow string from the start cell."""
    moves = tuple(Move.from_arrow(a) for a in arrows if not a.isspace())
    cells = [start]
    for move in moves:
        x, y = cells[-1]
        dx, dy = move.vector
        cells.append((x + dx, y + dy))
    return Production(grid_factor, tuple(cells), tuple(orientations), moves)


def derive_production(spec: GrammarSpec, op: DihedralOp) -> Production:
    """The production for an oriented copy: op applied to the base tour."""
    base = spec.base
    b = base.grid_factor
    return Production(
        grid_factor=b,
        cells=tuple(op.apply_xy(x, y, b) for x, y in base.cells),
        orientations=tuple(op.compose(g) for g in base.orientations),
        moves=tuple(op.apply_move(m) for m in base.moves),
    )


def derived_productions(spec: GrammarSpec) -> dict[DihedralOp, Production]:
    """Productions for all 8 orientations, keyed by the orienting symmetry."""
    return {op: derive_production(spec, op) for op in ALL_OPS}


def expand(spec: GrammarSpec, op: DihedralOp = IDENTITY, order: int = 1) -> ScanOrder:
    """Materialize the order-n path of the curve oriented by ``op``.

    Each level replaces every cell with an oriented copy of the tour, so
    the result visits the (b^order)^2 cells of the grid; for a valid
    grammar consecutive cells differ by a unit step and the path runs
    from the scaled entry corner to the scaled exit corner.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    b = spec.grid_factor
    total = (b * b) ** order
    if total > MAX_MATERIALIZED_CELLS:
        raise CapacityError(
            f"{spec.name} order {order} has {total} cells; materialization is capped at {MAX_MATERIALIZED_CELLS}"
        )
    prods = derived_productions(spec)
    memo: dict[tuple[DihedralOp, int], tuple[np.ndarray, np.ndarray]] = {}

    def rec(g: DihedralOp, level: int) -> tuple[np.ndarray, np.ndarray]:
        key = (g, level)
        if key in memo:
            return memo[key]
        prod = prods[g]
        if level == 1:
            arr = np.array(prod.cells, dtype=np.int64)
            out = (arr[:, 0], arr[:, 1])
        else:
            side = b ** (level - 1)
            m = (b * b) ** (level - 1)
            xs = np.empty(m * b * b, dtype=np.int64)
            ys = np.empty(m * b * b, dtype=np.int64)
            for j, ((cx, cy), child_op) in enumerate(zip(prod.cells, prod.orientations)):
                chx, chy = rec(child_op, level - 1)
                xs[j * m : (j + 1) * m] = chx + cx * side
                ys[j * m : (j + 1) * m] = chy + cy * side
            out = (xs, ys)
        memo[key] = out
        return out

    xs, ys = rec(op, order)
    side = b**order
    return ScanOrder(side, side, np.column_stack([xs, ys]), name=f"{spec.name}-{order}")


@dataclass(slots=True)
class ValidationVerdict:
    """Outcome of grammar validation; failures list the violated constraints in order."""

    ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _check_production(prod: Production, label: str) -> list[str]:
    b = prod.grid_factor
    failures = []
    if b < 2:
        return [f"{label}: grid factor must be >= 2"]
    if len(prod.cells) != b * b:
        failures.append(f"{label}: expected {b * b} cells, got {len(prod.cells)}")
    if len(prod.orientations) != len(prod.cells):
        failures.append(f"{label}: one orientation per cell required")
    if len(prod.moves) != len(prod.cells) - 1:
        failures.append(f"{label}: expected {len(prod.cells) - 1} moves")
    if failures:
        return failures
    if any(not (0 <= x < b and 0 <= y < b) for x, y in prod.cells):
        failures.append(f"{label}: cell outside the {b}x{b} grid")
    elif len(set(prod.cells)) != b * b:
        failures.append(f"{label}: cells not a permutation of the grid")
    for j, move in enumerate(prod.moves):
        x0, y0 = prod.cells[j]
        x1, y1 = prod.cells[j + 1]
        if (x1 - x0, y1 - y0) != move.vector:
            failures.append(f"{label}: move {j} ({move.arrow}) does not match cells {j}->{j + 1}")
            break
    return failures


def validate(spec: GrammarSpec) -> ValidationVerdict:
    """Check tour invariants and the continuity of the order-2 expansion.

    The verdict carries every violated constraint (first one first)
    instead of raising, so deliberately broken grammars can be inspected.
    """
    failures = _check_production(spec.base, "base production")
    if not failures:
        for op in ALL_OPS:
            failures.extend(_check_production(derive_production(spec, op), f"derived[{op.name}]"))
            if failures:
                break
    b = spec.grid_factor
    if not failures:
        for corner_name, cell in (("entry", spec.entry_cell), ("exit", spec.exit_cell)):
            if cell[0] not in (0, b - 1) or cell[1] not in (0, b - 1):
                failures.append(f"{corner_name} cell {cell} is not a grid corner")
    if not failures:
        path = expand(spec, IDENTITY, 2)
        side = b * b
        keys = path.xs * side + path.ys
        counts = np.bincount(keys, minlength=side * side)
        if not (counts == 1).all():
            failures.append("order-2 expansion is not a bijection")
        steps = np.abs(np.diff(path.xs)) + np.abs(np.diff(path.ys))
        breaks = np.nonzero(steps != 1)[0]
        if breaks.size:
            d = int(breaks[0])
            failures.append(
                f"order-2 expansion discontinuous at step {d}->{d + 1}: "
                f"{tuple(path.cells[d])} to {tuple(path.cells[d + 1])}"
            )
        scale = (side - 1) // (b - 1)  # maps corner coordinates 0 / b-1 to 0 / side-1
        expected_entry = (spec.entry_cell[0] * scale, spec.entry_cell[1] * scale)
        expected_exit = (spec.exit_cell[0] * scale, spec.exit_cell[1] * scale)
        if path.cell(0) != expected_entry:
            failures.append(f"order-2 expansion enters at {path.cell(0)}, expected {expected_entry}")
        if path.cell(len(path) - 1) != expected_exit:
            failures.append(
                f"order-2 expansion exits at {path.cell(len(path) - 1)}, expected {expected_exit}"
            )
    return ValidationVerdict(ok=not failures, failures=failures)


# --------------------------------------------------------------------------
# Built-in grammars
# --------------------------------------------------------------------------

# Orientations of the Aztec tour.  B is the main-diagonal transpose: the
# mirror across the vertical axis followed by a quarter turn clockwise.
# C is the half-turn of B (anti-diagonal transpose) and D the half-turn
# of the base pattern.  Of the eight symmetries, B = transpose is the
# only choice whose order-2 expansion stays continuous (see the
# validation sweep in the test suite).
AZTEC_A = IDENTITY
AZTEC_B = TRANSPOSE
AZTEC_C = ANTI_TRANSPOSE
AZTEC_D = ROT180

_A, _B, _C, _D = AZTEC_A, AZTEC_B, AZTEC_C, AZTEC_D

AZTEC = GrammarSpec(
    "aztec",
    production_from_arrows(
        4,
        (_B, _B, _B, _A, _A, _A, _A, _C, _D, _D, _B, _C, _C, _C, _A, _A),
        "↑↑↑→→→↓↓←↑←↓↓→→",
    ),
)

HILBERT = GrammarSpec(
    "hilbert",
    production_from_arrows(
        2,
        (TRANSPOSE, IDENTITY, IDENTITY, ANTI_TRANSPOSE),
        "↑→↓",
    ),
)

PEANO = GrammarSpec(
    "peano",
    production_from_arrows(
        3,
        (
            IDENTITY,
            MIRROR_V,
            IDENTITY,
            MIRROR_H,
            ROT180,
            MIRROR_H,
            IDENTITY,
            MIRROR_V,
            IDENTITY,
        ),
        "↑↑→↓↓→↑↑",
    ),
)
