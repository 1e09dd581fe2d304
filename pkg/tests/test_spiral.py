from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pulsar.spiral import (
    build_pattern,
    circled_walk_outward,
    uncircled_walk_outward,
)

from oracles import read_mask

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.mark.parametrize("n", [5, 6, 7])
def test_mask_matches_figures(n):
    golden = read_mask(FIXTURES / f"pattern_{n}.txt")
    assert [list(row) for row in build_pattern(n).circled_mask] == golden


def test_n5_rows():
    mask = build_pattern(5).circled_mask
    circled_cols = [{c + 1 for c, x in enumerate(row) if x} for row in mask]
    assert circled_cols == [{1, 2, 3, 4, 5}, {5}, {2, 3, 5}, {2, 5}, {2, 3, 4, 5}]


def test_base_case():
    p = build_pattern(2)
    assert set(p.circled_walk()) == {(1, 1), (1, 2), (2, 2)}
    assert p.uncircled_walk() == [(2, 1)]


def test_n1():
    p = build_pattern(1)
    assert circled_walk_outward(p) == [(1, 1)]
    assert uncircled_walk_outward(p) == []
    assert p.uncircled_pieces == ()


def test_n9_count():
    assert sum(map(sum, build_pattern(9).circled_mask)) == 45


@pytest.mark.parametrize("bad", [0, -3])
def test_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        build_pattern(bad)


def test_outward_walks_n5():
    p = build_pattern(5)
    out = circled_walk_outward(p)
    assert out[0] == (3, 3) and out[-1] == (1, 1)
    assert uncircled_walk_outward(p) == [
        (4, 3), (4, 4), (3, 4), (2, 4), (2, 3), (2, 2), (2, 1), (3, 1), (4, 1), (5, 1),
    ]


def test_outward_walk_n7_starts_at_center_piece():
    assert circled_walk_outward(build_pattern(7))[0] == (5, 4)


def test_piece_lengths():
    p = build_pattern(6)
    assert [x.length for x in p.circled_pieces] == [6, 5, 4, 3, 2, 1]
    assert [x.length for x in p.uncircled_pieces] == [5, 4, 3, 2, 1]


def _straight(cells):
    rows = {r for r, _ in cells}
    cols = {c for _, c in cells}
    if len(rows) == 1:
        seq = sorted(c for _, c in cells)
    elif len(cols) == 1:
        seq = sorted(r for r, _ in cells)
    else:
        return False
    return seq == list(range(seq[0], seq[0] + len(seq)))


@settings(max_examples=64, deadline=None)
@given(st.integers(min_value=1, max_value=64))
def test_pattern_invariants(n):
    p = build_pattern(n)
    circled = p.circled_walk()
    uncircled = p.uncircled_walk()
    assert len(circled) == len(set(circled)) == n * (n + 1) // 2
    assert len(uncircled) == len(set(uncircled)) == n * (n - 1) // 2
    assert set(circled) | set(uncircled) == {(r, c) for r in range(1, n + 1) for c in range(1, n + 1)}
    assert all(p.is_circled(cell) for cell in circled)
    assert not any(p.is_circled(cell) for cell in uncircled)
    assert sorted(p.row_circle_counts()) == list(range(1, n + 1))
    assert sorted(p.col_circle_counts()) == list(range(1, n + 1))
    for k, piece in enumerate(p.circled_pieces, start=1):
        assert piece.length == n + 1 - k and _straight(piece.cells)
    for k, piece in enumerate(p.uncircled_pieces, start=1):
        assert piece.length == n - k and _straight(piece.cells)
    for pieces in (p.circled_pieces, p.uncircled_pieces):
        for a, b in zip(pieces, pieces[1:]):
            (r1, c1), (r2, c2) = a.cells[-1], b.cells[0]
            assert abs(r1 - r2) + abs(c1 - c2) == 1
