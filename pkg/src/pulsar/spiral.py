"""Spiral geometry of the n x n Pulsar puzzle.

Coordinates are 1-based ``(row, col)`` with row 1 at the top. Both spirals
turn clockwise; the circled one starts at the top-left corner heading right,
the uncircled one starts at the bottom-left corner heading up.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple


class CellCoord(NamedTuple):
    row: int
    col: int


# right, down, left, up
_DIRECTIONS = ((0, 1), (1, 0), (0, -1), (-1, 0))
RIGHT, DOWN, LEFT, UP = range(4)


@dataclass(frozen=True)
class Piece:
    """A straight run of spiral cells in a single row or column."""

    index: int
    cells: tuple[CellCoord, ...]

    @property
    def length(self) -> int:
        return len(self.cells)


@dataclass(frozen=True)
class SpiralPattern:
    n: int
    circled_mask: tuple[tuple[bool, ...], ...]
    circled_pieces: tuple[Piece, ...]
    uncircled_pieces: tuple[Piece, ...]

    def is_circled(self, cell: tuple[int, int]) -> bool:
        r, c = cell
        return self.circled_mask[r - 1][c - 1]

    def circled_walk(self) -> list[CellCoord]:
        """Circled cells in inward order (top-left corner first)."""
        return [cell for piece in self.circled_pieces for cell in piece.cells]

    def uncircled_walk(self) -> list[CellCoord]:
        return [cell for piece in self.uncircled_pieces for cell in piece.cells]

    def row_circle_counts(self) -> list[int]:
        return [sum(row) for row in self.circled_mask]

    def col_circle_counts(self) -> list[int]:
        return [sum(col) for col in zip(*self.circled_mask)]


def _walk(start: CellCoord, heading: int, lengths: list[int]) -> tuple[Piece, ...]:
    pieces = []
    r, c = start
    for k, length in enumerate(lengths, start=1):
        dr, dc = _DIRECTIONS[heading]
        if k > 1:
            # step off the previous piece's last cell in the new direction
            r, c = r + dr, c + dc
        cells = []
        for step in range(length):
            if step:
                r, c = r + dr, c + dc
            cells.append(CellCoord(r, c))
        pieces.append(Piece(k, tuple(cells)))
        heading = (heading + 1) % 4
    return tuple(pieces)


@lru_cache(maxsize=256)
def build_pattern(n: int) -> SpiralPattern:
    """Build the circled and uncircled spirals for an ``n x n`` grid."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"grid size must be a positive integer, got {n!r}")
    circled = _walk(CellCoord(1, 1), RIGHT, [n + 1 - k for k in range(1, n + 1)])
    uncircled = _walk(CellCoord(n, 1), UP, [n - k for k in range(1, n)]) if n > 1 else ()
    mask = [[False] * n for _ in range(n)]
    for piece in circled:
        for r, c in piece.cells:
            mask[r - 1][c - 1] = True
    return SpiralPattern(
        n=n,
        circled_mask=tuple(tuple(row) for row in mask),
        circled_pieces=circled,
        uncircled_pieces=uncircled,
    )


def circled_walk_outward(pattern: SpiralPattern) -> list[CellCoord]:
    """Circled cells from the center outward; ends at (1, 1)."""
    return pattern.circled_walk()[::-1]


def uncircled_walk_outward(pattern: SpiralPattern) -> list[CellCoord]:
    """Uncircled cells from the center outward; ends at (n, 1). Empty for n = 1."""
    return pattern.uncircled_walk()[::-1]


def piece_of_cell(pattern: SpiralPattern) -> dict[CellCoord, int]:
    """Map every circled cell to the index of its circled piece."""
    return {cell: piece.index for piece in pattern.circled_pieces for cell in piece.cells}
