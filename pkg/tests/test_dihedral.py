import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sfckit.dihedral import (
    ALL_OPS,
    ANTI_TRANSPOSE,
    IDENTITY,
    MIRROR_H,
    MIRROR_V,
    ROT90_CCW,
    ROT90_CW,
    ROT180,
    TRANSPOSE,
    DihedralOp,
    Move,
)

# Independent oracle: each symmetry written directly as a coordinate map,
# with no shared code with DihedralOp.apply.
ELEMENTARY = {
    IDENTITY: lambda x, y, n: (x, y),
    TRANSPOSE: lambda x, y, n: (y, x),
    ANTI_TRANSPOSE: lambda x, y, n: (n - 1 - y, n - 1 - x),
    ROT90_CW: lambda x, y, n: (y, n - 1 - x),
    ROT90_CCW: lambda x, y, n: (n - 1 - y, x),
    ROT180: lambda x, y, n: (n - 1 - x, n - 1 - y),
    MIRROR_V: lambda x, y, n: (n - 1 - x, y),
    MIRROR_H: lambda x, y, n: (x, n - 1 - y),
}

GRID4 = [(x, y) for x in range(4) for y in range(4)]


def test_exactly_eight_distinct_ops():
    assert len(set(ALL_OPS)) == 8
    assert set(ALL_OPS) == {
        DihedralOp(s, fx, fy) for s in (False, True) for fx in (False, True) for fy in (False, True)
    }


@pytest.mark.parametrize("op", ALL_OPS, ids=lambda op: op.name)
def test_apply_matches_elementary_map(op):
    fn = ELEMENTARY[op]
    for n in (2, 3, 4, 5):
        for x in range(n):
            for y in range(n):
                assert op.apply((x, y), n) == fn(x, y, n)


@pytest.mark.parametrize("op", ALL_OPS, ids=lambda op: op.name)
def test_apply_is_bijection(op):
    for n in (3, 4):
        cells = {op.apply((x, y), n) for x in range(n) for y in range(n)}
        assert len(cells) == n * n
        assert all(0 <= x < n and 0 <= y < n for x, y in cells)


def test_apply_rejects_off_grid_cell():
    with pytest.raises(ValueError):
        IDENTITY.apply((4, 0), 4)
    with pytest.raises(ValueError):
        ROT180.apply((0, -1), 4)


def test_group_closure_and_associativity():
    for g, h in itertools.product(ALL_OPS, repeat=2):
        assert g.compose(h) in ALL_OPS
    for f, g, h in itertools.product(ALL_OPS, repeat=3):
        assert f.compose(g).compose(h) == f.compose(g.compose(h))


@pytest.mark.parametrize("g", ALL_OPS, ids=lambda op: op.name)
@pytest.mark.parametrize("h", ALL_OPS, ids=lambda op: op.name)
def test_compose_agrees_with_pointwise_action(g, h):
    k = g.compose(h)
    for cell in GRID4:
        assert k.apply(cell, 4) == g.apply(h.apply(cell, 4), 4)


def test_identity_and_inverses():
    for op in ALL_OPS:
        assert op.compose(IDENTITY) == op
        assert IDENTITY.compose(op) == op
        inv = op.inverse()
        assert op.compose(inv) == IDENTITY
        assert inv.compose(op) == IDENTITY
        # applying an op then its inverse returns every cell, any grid size
        for n in (2, 5, 8):
            for cell in ((0, 0), (1, 0), (n - 1, n - 2)):
                assert inv.apply(op.apply(cell, n), n) == cell


def test_compose_examples():
    assert IDENTITY.compose(ROT180) == ROT180
    # half-turn of the main-diagonal transpose is the anti-diagonal transpose
    assert ROT180.compose(TRANSPOSE) == ANTI_TRANSPOSE
    # quarter turn clockwise after a vertical-axis mirror: evaluate both
    # sides on all 16 cells of the 4x4 grid via the elementary maps
    composed = ROT90_CW.compose(MIRROR_V)
    for x, y in GRID4:
        mirrored = ELEMENTARY[MIRROR_V](x, y, 4)
        assert composed.apply((x, y), 4) == ELEMENTARY[ROT90_CW](*mirrored, 4)
    assert composed == TRANSPOSE


def test_move_transform_examples():
    assert IDENTITY.apply_move(Move.UP) == Move.UP
    assert ROT180.apply_move(Move.UP) == Move.DOWN
    assert TRANSPOSE.apply_move(Move.UP) == Move.RIGHT


@pytest.mark.parametrize("op", ALL_OPS, ids=lambda op: op.name)
@pytest.mark.parametrize("move", list(Move))
def test_move_transform_consistent_with_cell_action(op, move):
    # moving then transforming equals transforming then moving, checked on
    # the endpoints of a unit step away from the grid edge
    n = 6
    for x in range(1, n - 1):
        for y in range(1, n - 1):
            dx, dy = move.vector
            via_cells = op.apply((x + dx, y + dy), n)
            bx, by = op.apply((x, y), n)
            mdx, mdy = op.apply_move(move).vector
            assert via_cells == (bx + mdx, by + mdy)


@given(
    st.sampled_from(ALL_OPS),
    st.sampled_from(ALL_OPS),
    st.integers(min_value=2, max_value=64),
    st.data(),
)
def test_compose_postcondition_property(g, h, n, data):
    x = data.draw(st.integers(min_value=0, max_value=n - 1))
    y = data.draw(st.integers(min_value=0, max_value=n - 1))
    assert g.compose(h).apply((x, y), n) == g.apply(h.apply((x, y), n), n)


def test_moves_round_trip_arrows():
    for move in Move:
        assert Move.from_arrow(move.arrow) == move
    with pytest.raises(ValueError):
        Move.from_arrow("x")
    with pytest.raises(ValueError):
        Move.from_vector(1, 1)
