import numpy as np
import pytest

from sfckit.dihedral import (
    ALL_OPS,
    ANTI_TRANSPOSE,
    IDENTITY,
    ROT90_CW,
    ROT180,
    TRANSPOSE,
    Move,
)
from sfckit.errors import CapacityError
from sfckit.grammar import (
    AZTEC,
    AZTEC_B,
    HILBERT,
    PEANO,
    GrammarSpec,
    Production,
    derive_production,
    expand,
    production_from_arrows,
    validate,
)

# Oracle: walk an arrow string step by step, independent of the engine.
def arrow_walk(arrows, start=(0, 0)):
    steps = {"↑": (0, 1), "↓": (0, -1), "←": (-1, 0), "→": (1, 0)}
    cells = [start]
    for a in arrows:
        dx, dy = steps[a]
        x, y = cells[-1]
        cells.append((x + dx, y + dy))
    return cells


AZTEC_ARROWS = "↑↑↑→→→↓↓←↑←↓↓→→"

# Frozen via arrow_walk(AZTEC_ARROWS); the base tour climbs the left edge,
# crosses the top, spirals inward, and exits along the bottom edge.
AZTEC_ORDER1 = [
    (0, 0), (0, 1), (0, 2), (0, 3),
    (1, 3), (2, 3), (3, 3), (3, 2),
    (3, 1), (2, 1), (2, 2), (1, 2),
    (1, 1), (1, 0), (2, 0), (3, 0),
]


def test_arrow_walk_oracle_matches_frozen_tour():
    assert arrow_walk(AZTEC_ARROWS) == AZTEC_ORDER1


def test_aztec_base_production_follows_the_arrows():
    assert AZTEC.base.cells == tuple(AZTEC_ORDER1)
    assert AZTEC.entry_cell == (0, 0)
    assert AZTEC.exit_cell == (3, 0)
    assert len(AZTEC.base.orientations) == 16
    assert len(AZTEC.base.moves) == 15


def test_expand_order1_matches_arrow_trace():
    path = expand(AZTEC, IDENTITY, 1)
    assert [tuple(c) for c in path.cells] == AZTEC_ORDER1


def test_hilbert_order1():
    path = expand(HILBERT, IDENTITY, 1)
    assert [tuple(c) for c in path.cells] == [(0, 0), (0, 1), (1, 1), (1, 0)]


def test_peano_order1():
    path = expand(PEANO, IDENTITY, 1)
    assert [tuple(c) for c in path.cells] == arrow_walk("↑↑→↓↓→↑↑")


def test_derive_production_identity_is_base():
    assert derive_production(AZTEC, IDENTITY) == AZTEC.base


def test_derive_production_corner_examples():
    b = derive_production(AZTEC, AZTEC_B)
    assert b.cells[0] == (0, 0)
    assert b.cells[15] == (0, 3)
    c = derive_production(AZTEC, ANTI_TRANSPOSE)
    assert c.cells[0] == (3, 3)


@pytest.mark.parametrize("spec", [AZTEC, HILBERT, PEANO], ids=lambda s: s.name)
@pytest.mark.parametrize("op", ALL_OPS, ids=lambda op: op.name)
def test_every_derived_production_is_arrow_consistent(spec, op):
    prod = derive_production(spec, op)
    b = prod.grid_factor
    assert sorted(prod.cells) == [(x, y) for x in range(b) for y in range(b)]
    for j, move in enumerate(prod.moves):
        x0, y0 = prod.cells[j]
        x1, y1 = prod.cells[j + 1]
        assert (x1 - x0, y1 - y0) == move.vector


@pytest.mark.parametrize("spec", [AZTEC, HILBERT, PEANO], ids=lambda s: s.name)
def test_builtin_grammars_validate(spec):
    verdict = validate(spec)
    assert verdict.ok, verdict.failures


def test_expand_order2_block_structure():
    path = expand(AZTEC, IDENTITY, 2)
    assert len(path) == 256
    blocks = path.cells // 4
    # indices 0..15 stay in block (0,0); index 16 starts block (0,1)
    assert (blocks[:16] == (0, 0)).all()
    assert tuple(blocks[16]) == (0, 1)
    # every run of 16 indices fills one block, visited in the order-1 tour
    for j in range(16):
        chunk = blocks[16 * j : 16 * (j + 1)]
        assert (chunk == chunk[0]).all()
        assert tuple(chunk[0]) == AZTEC_ORDER1[j]


@pytest.mark.parametrize("spec", [AZTEC, HILBERT, PEANO], ids=lambda s: s.name)
@pytest.mark.parametrize("op", ALL_OPS, ids=lambda op: op.name)
def test_conjugation_property(spec, op):
    # expanding an oriented copy equals transforming the identity expansion
    for order in (1, 2, 3):
        side = spec.grid_factor**order
        base = expand(spec, IDENTITY, order)
        oriented = expand(spec, op, order)
        tx, ty = op.apply_xy(base.xs, base.ys, side)
        assert (oriented.xs == tx).all() and (oriented.ys == ty).all()


def test_aztec_entry_exit_corner_table():
    for order in (1, 2, 3):
        m = 4**order - 1
        expected = {
            IDENTITY: ((0, 0), (m, 0)),
            TRANSPOSE: ((0, 0), (0, m)),
            ANTI_TRANSPOSE: ((m, m), (m, 0)),
            ROT180: ((m, m), (0, m)),
        }
        for op, (entry, exit_) in expected.items():
            path = expand(AZTEC, op, order)
            assert path.cell(0) == entry
            assert path.cell(len(path) - 1) == exit_


def _aztec_with_b(candidate):
    """Aztec grammar with the transpose slots replaced by `candidate`
    (and the anti-transpose slots by its half-turn)."""
    slots = tuple(
        candidate if op == TRANSPOSE else ROT180.compose(candidate) if op == ANTI_TRANSPOSE else op
        for op in AZTEC.base.orientations
    )
    return GrammarSpec("aztec-candidate", production_from_arrows(4, slots, AZTEC_ARROWS))


def test_only_the_transpose_keeps_order2_continuous():
    # brute force over all 8 candidate orientations for the B slots
    passing = {op for op in ALL_OPS if validate(_aztec_with_b(op)).ok}
    assert passing == {TRANSPOSE}


def test_pure_quarter_turn_fails_at_a_block_junction():
    verdict = validate(_aztec_with_b(ROT90_CW))
    assert not verdict.ok
    # the tour inside each block stays intact, so the first failure is the
    # discontinuity where block 0 hands over to block 1
    assert "discontinuous at step 15->16" in verdict.failures[0]


def test_validate_reports_duplicated_cell():
    cells = list(AZTEC.base.cells)
    cells[5] = cells[4]
    broken = GrammarSpec(
        "broken",
        Production(4, tuple(cells), AZTEC.base.orientations, AZTEC.base.moves),
    )
    verdict = validate(broken)
    assert not verdict.ok
    assert any("not a permutation" in f for f in verdict.failures)


def test_validate_reports_bad_arrow():
    moves = list(AZTEC.base.moves)
    moves[3] = Move.DOWN
    broken = GrammarSpec(
        "broken",
        Production(4, AZTEC.base.cells, AZTEC.base.orientations, tuple(moves)),
    )
    verdict = validate(broken)
    assert not verdict.ok
    assert any("does not match" in f for f in verdict.failures)


@pytest.mark.parametrize(
    "spec,orders",
    [(AZTEC, (1, 2, 3)), (HILBERT, (1, 2, 3, 4, 5, 6)), (PEANO, (1, 2, 3))],
    ids=lambda v: getattr(v, "name", str(v)),
)
def test_expansions_are_bijective_and_continuous(spec, orders):
    for order in orders:
        path = expand(spec, IDENTITY, order)
        side = spec.grid_factor**order
        keys = path.xs * side + path.ys
        assert np.bincount(keys, minlength=side * side).min() == 1
        steps = np.abs(np.diff(path.xs)) + np.abs(np.diff(path.ys))
        assert (steps == 1).all()


def test_expand_capacity_cap():
    with pytest.raises(CapacityError):
        expand(AZTEC, IDENTITY, 8)  # 2^32 cells
    with pytest.raises(ValueError):
        expand(AZTEC, IDENTITY, 0)
