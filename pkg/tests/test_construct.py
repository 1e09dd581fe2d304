from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pulsar.construct import (
    DimensionMismatchError,
    Grid,
    IncompleteGridError,
    construct_direct,
    construct_recursive,
    verify,
)
from pulsar.sequence import block, prefix
from pulsar.spiral import build_pattern, circled_walk_outward, uncircled_walk_outward

from oracles import pulsar_solutions_brute

# unique n=5 solution, found by the brute-force oracle over all 161280 Latin squares
N5_SOLUTION = [
    [5, 2, 3, 4, 1],
    [4, 1, 2, 3, 5],
    [2, 4, 5, 1, 3],
    [3, 5, 1, 2, 4],
    [1, 3, 4, 5, 2],
]


def test_base_case():
    assert construct_direct(2).rows() == [[2, 1], [1, 2]]
    assert construct_recursive(2).rows() == [[2, 1], [1, 2]]


def test_n1():
    grid = construct_direct(1)
    assert grid.rows() == [[1]]
    assert verify(grid, build_pattern(1)).all_ok


def test_n5_grid():
    assert construct_direct(5).rows() == N5_SOLUTION


def test_n5_worked_fill():
    grid = construct_direct(5)
    p = build_pattern(5)
    assert [grid[c] for c in circled_walk_outward(p)] == [5, 4, 5, 3, 4, 5, 2, 4, 3, 5, 1, 4, 3, 2, 5]
    assert [grid[c] for c in uncircled_walk_outward(p)] == prefix(10)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_brute_force_agrees(n):
    mask = [list(r) for r in build_pattern(n).circled_mask]
    solutions = pulsar_solutions_brute(n, mask)
    assert [list(map(list, s)) for s in solutions] == [construct_direct(n).rows()]


def test_recursive_top_row():
    assert list(construct_recursive(5).values[0]) == [5, 2, 3, 4, 1]


@pytest.mark.parametrize("bad", [0, -1])
def test_construct_domain(bad):
    with pytest.raises(ValueError):
        construct_direct(bad)
    with pytest.raises(ValueError):
        construct_recursive(bad)


@pytest.mark.parametrize("n", range(1, 33))
def test_recursive_equals_direct(n):
    assert construct_recursive(n) == construct_direct(n)


def test_verify_flags_circle_rule():
    report = verify(Grid.from_rows([[1, 2], [2, 1]]), build_pattern(2))
    assert report.latin_ok
    assert not report.circle_rule_ok
    assert ("circle_rule", "digit 1", "appears in 2 circles") in report.failures


def test_verify_flags_duplicate():
    rows = construct_direct(5).rows()
    rows[0][1] = rows[0][0]
    report = verify(Grid.from_rows(rows), build_pattern(5))
    assert not report.latin_ok
    assert any(f[0] == "latin" and f[1] == "row 1" for f in report.failures)
    assert not report.all_ok


def test_verify_reports_every_failure():
    # a Latin square that ignores the circles entirely
    n = 4
    rows = [[(r + c) % n + 1 for c in range(n)] for r in range(n)]
    report = verify(Grid.from_rows(rows), build_pattern(n))
    assert report.latin_ok
    rules = {f[0] for f in report.failures}
    assert {"circle_rule", "piece_contents"} <= rules
    assert bool(report.failures) == (not report.all_ok)


def test_verify_errors():
    with pytest.raises(DimensionMismatchError):
        verify(construct_direct(3), build_pattern(4))
    with pytest.raises(IncompleteGridError):
        verify(Grid.from_rows([[2, 0], [1, 2]]), build_pattern(2))


@settings(max_examples=64, deadline=None)
@given(st.integers(1, 64))
def test_structural_claims(n):
    grid = construct_direct(n)
    pattern = build_pattern(n)
    report = verify(grid, pattern)
    assert report.all_ok, report.summary()

    census = Counter(grid[c] for c in pattern.circled_walk())
    assert census == Counter({d: d for d in range(1, n + 1)})

    assert verify(grid.dualized(), pattern).latin_ok

    if n >= 2:
        first = grid.column(1)[1:]
        last = grid.column(n)[1:]
        assert first == list(block(n - 1).entries)
        assert last == [n + 1 - a for a in reversed(block(n - 1).entries)]

    top = grid.values[0]
    assert all(top[j] + top[n - 1 - j] == n + 1 for j in range(n))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 12), st.data())
def test_verify_catches_random_swaps(n, data):
    rows = construct_direct(n).rows()
    r = data.draw(st.integers(0, n - 1))
    a, b = data.draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
    rows[r][a], rows[r][b] = rows[r][b], rows[r][a]
    # the solution is unique, so any change must break some rule
    assert not verify(Grid.from_rows(rows), build_pattern(n)).rules_ok
