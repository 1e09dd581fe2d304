"""Build the Pulsar solution two ways and check grids against every rule.

``construct_direct`` lays the sequence along the two spirals. ``construct_recursive``
grows the size-n grid from the size-(n-1) one: the lower-right corner is the
smaller solution rotated a quarter turn with its circled values bumped by one,
the lower-left corner is the smaller solution's dual rotated the other way, and
the top row is forced column by column.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from pulsar.sequence import block, dual_block
from pulsar.spiral import (
    SpiralPattern,
    build_pattern,
    circled_walk_outward,
    uncircled_walk_outward,
)


class IncompleteGridError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Grid:
    values: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Grid":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    def __getitem__(self, cell: tuple[int, int]) -> int:
        r, c = cell
        return self.values[r - 1][c - 1]

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.values]

    def column(self, c: int) -> list[int]:
        return [row[c - 1] for row in self.values]

    def dualized(self) -> "Grid":
        n = self.n
        return Grid(tuple(tuple(n + 1 - v for v in row) for row in self.values))


def _check_size(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"grid size must be a positive integer, got {n!r}")


def construct_direct(n: int) -> Grid:
    _check_size(n)
    pattern = build_pattern(n)
    cells = [[0] * n for _ in range(n)]
    circled_fill = [x for i in range(1, n + 1) for x in dual_block(i, n)]
    for (r, c), v in zip(circled_walk_outward(pattern), circled_fill, strict=True):
        cells[r - 1][c - 1] = v
    uncircled_fill = [x for i in range(1, n) for x in block(i).entries]
    for (r, c), v in zip(uncircled_walk_outward(pattern), uncircled_fill, strict=True):
        cells[r - 1][c - 1] = v
    return Grid.from_rows(cells)


def _rotate_cw(rows: list[list[int]]) -> list[list[int]]:
    return [list(row) for row in zip(*rows[::-1])]


def _rotate_ccw(rows: list[list[int]]) -> list[list[int]]:
    return [list(row) for row in zip(*rows)][::-1]


@lru_cache(maxsize=64)
def construct_recursive(n: int) -> Grid:
    _check_size(n)
    if n == 1:
        return Grid(((1,),))
    if n == 2:
        return Grid(((2, 1), (1, 2)))

    pattern = build_pattern(n)
    smaller = construct_recursive(n - 1).rows()
    cells = [[0] * n for _ in range(n)]

    # P': rows 2..n, cols 2..n hold the smaller solution turned clockwise.
    turned = _rotate_cw(smaller)
    for r in range(2, n + 1):
        for c in range(2, n + 1):
            if pattern.circled_mask[r - 1][c - 1]:
                cells[r - 1][c - 1] = turned[r - 2][c - 2] + 1

    # P'': rows 2..n, cols 1..n-1 hold the smaller solution turned
    # counterclockwise, with circles and blanks swapped; its circled cells carry
    # the dual sequence, so dualize to recover the plain one.
    turned = _rotate_ccw(smaller)
    for r in range(2, n + 1):
        for c in range(1, n):
            if not pattern.circled_mask[r - 1][c - 1]:
                cells[r - 1][c - 1] = n - turned[r - 2][c - 1]

    for c in range(1, n + 1):
        uncircled_below = sum(
            1 for r in range(2, n + 1) if not pattern.circled_mask[r - 1][c - 1]
        )
        cells[0][c - 1] = 1 + uncircled_below
    return Grid.from_rows(cells)


@dataclass
class VerifyReport:
    latin_ok: bool = True
    circle_rule_ok: bool = True
    dominance_ok: bool = True
    piece_contents_ok: bool = True
    column_offset_ok: bool = True
    failures: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def rules_ok(self) -> bool:
        """Latin and circle rule only; the puzzle's actual constraints."""
        return self.latin_ok and self.circle_rule_ok

    @property
    def all_ok(self) -> bool:
        return (
            self.rules_ok
            and self.dominance_ok
            and self.piece_contents_ok
            and self.column_offset_ok
        )

    def fail(self, rule: str, location: str, detail: str) -> None:
        setattr(self, f"{rule}_ok", False)
        self.failures.append((rule, location, detail))

    def to_dict(self) -> dict:
        return {
            "latin_ok": self.latin_ok,
            "circle_rule_ok": self.circle_rule_ok,
            "dominance_ok": self.dominance_ok,
            "piece_contents_ok": self.piece_contents_ok,
            "column_offset_ok": self.column_offset_ok,
            "failures": [list(f) for f in self.failures],
        }

    def summary(self) -> str:
        lines = []
        for rule in ("latin", "circle_rule", "dominance", "piece_contents", "column_offset"):
            ok = getattr(self, f"{rule}_ok")
            lines.append(f"{rule:15s} {'ok' if ok else 'FAIL'}")
        for rule, location, detail in self.failures:
            lines.append(f"  {rule} at {location}: {detail}")
        return "\n".join(lines)


def _lines(n: int):
    for r in range(1, n + 1):
        yield f"row {r}", [(r, c) for c in range(1, n + 1)]
    for c in range(1, n + 1):
        yield f"col {c}", [(r, c) for r in range(1, n + 1)]


def verify(grid: Grid, pattern: SpiralPattern) -> VerifyReport:
    """Check a complete grid against the puzzle rules and the structural claims.

    Every failure is collected; nothing short-circuits. ``latin`` and
    ``circle_rule`` are the puzzle's rules, the other three are properties the
    unique solution is known to have.
    """
    n = pattern.n
    if grid.n != n or any(len(row) != n for row in grid.values):
        raise DimensionMismatchError(f"grid is not {n}x{n}")
    for r, row in enumerate(grid.values, start=1):
        for c, v in enumerate(row, start=1):
            if not isinstance(v, int) or not 1 <= v <= n:
                raise IncompleteGridError(f"cell ({r},{c}) holds {v!r}, expected 1..{n}")

    report = VerifyReport()
    circled = pattern.is_circled
    full = list(range(1, n + 1))

    for where, cells in _lines(n):
        values = [grid[cell] for cell in cells]
        if sorted(values) != full:
            dupes = sorted(v for v, k in Counter(values).items() if k > 1)
            report.fail("latin", where, f"repeated values {dupes}")

    census = Counter(grid[cell] for cell in pattern.circled_walk())
    for d in range(1, n + 1):
        if census[d] and census[d] != d:
            report.fail("circle_rule", f"digit {d}", f"appears in {census[d]} circles")

    for where, cells in _lines(n):
        inside = [grid[cell] for cell in cells if circled(cell)]
        outside = [grid[cell] for cell in cells if not circled(cell)]
        if inside and outside and min(inside) <= max(outside):
            report.fail(
                "dominance", where,
                f"circled min {min(inside)} <= uncircled max {max(outside)}",
            )

    for piece in pattern.circled_pieces:
        size = piece.length
        got = sorted(grid[cell] for cell in piece.cells)
        want = list(range(n - size + 1, n + 1))
        if got != want:
            report.fail("piece_contents", f"piece {piece.index}", f"holds {got}, expected {want}")

    for r in range(2, n + 1):
        first, last = grid[r, 1], grid[r, n]
        if last != first + 1:
            report.fail("column_offset", f"row {r}", f"first {first}, last {last}")

    return report
