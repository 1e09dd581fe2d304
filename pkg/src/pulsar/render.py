"""Text, JSON and SVG renderings of patterns and grids."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from pulsar.construct import Grid
from pulsar.spiral import SpiralPattern, build_pattern

CELL = 40  # svg units per cell


class DocumentError(ValueError):
    """Raised for JSON that is not a well-formed puzzle document."""


@dataclass
class PuzzleDocument:
    n: int
    circled: list[list[bool]]
    grid: Optional[list[list[int]]] = None
    meta: dict[str, str] = field(default_factory=dict)

    @classmethod
    def for_pattern(cls, pattern: SpiralPattern, grid: Optional[Grid] = None) -> "PuzzleDocument":
        return cls(
            n=pattern.n,
            circled=[list(row) for row in pattern.circled_mask],
            grid=grid.rows() if grid is not None else None,
            meta={"kind": "pulsar"},
        )

    def to_json(self) -> str:
        doc: dict[str, Any] = {"n": self.n, "circled": self.circled}
        if self.grid is not None:
            doc["grid"] = self.grid
        doc["meta"] = self.meta
        return json.dumps(doc)

    @classmethod
    def from_json(cls, text: str) -> "PuzzleDocument":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not valid JSON: {exc}") from exc
        if not isinstance(raw, dict):
            raise DocumentError("document must be a JSON object")
        n = raw.get("n")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise DocumentError(f"'n' must be a positive integer, got {n!r}")
        circled = raw.get("circled")
        if not _is_square(circled, n) or not all(
            isinstance(x, bool) for row in circled for x in row
        ):
            raise DocumentError(f"'circled' must be an {n}x{n} array of booleans")
        grid = raw.get("grid")
        if grid is not None:
            if not _is_square(grid, n) or not all(
                isinstance(x, int) and not isinstance(x, bool) for row in grid for x in row
            ):
                raise DocumentError(f"'grid' must be an {n}x{n} array of integers")
            if any(not 1 <= x <= n for row in grid for x in row):
                raise DocumentError(f"'grid' values must lie in 1..{n}")
        meta = raw.get("meta", {})
        if not isinstance(meta, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in meta.items()
        ):
            raise DocumentError("'meta' must map strings to strings")
        doc = cls(n=n, circled=circled, grid=grid, meta=meta)
        if meta.get("kind") == "pulsar" and circled != [list(r) for r in build_pattern(n).circled_mask]:
            raise DocumentError("document is marked as a Pulsar instance but its circles are not the spiral")
        return doc


def _is_square(rows: Any, n: int) -> bool:
    return (
        isinstance(rows, list)
        and len(rows) == n
        and all(isinstance(row, list) and len(row) == n for row in rows)
    )


def ascii_pattern(pattern: SpiralPattern) -> str:
    return "\n".join(
        "".join("( )" if c else " . " for c in row).rstrip()
        for row in pattern.circled_mask
    )


def ascii_grid(grid: Grid, pattern: SpiralPattern) -> str:
    """Circled values in parentheses, the rest padded with spaces."""
    width = len(str(pattern.n))
    lines = []
    for row, mask in zip(grid.values, pattern.circled_mask):
        line = "".join(
            f"({v:>{width}})" if circled else f" {v:>{width}} "
            for v, circled in zip(row, mask)
        )
        lines.append(line.rstrip())
    return "\n".join(lines)


def svg(pattern: SpiralPattern, grid: Optional[Grid] = None) -> str:
    n = pattern.n
    size = n * CELL
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
    ]
    for k in range(n + 1):
        p = k * CELL
        out.append(f'<line x1="{p}" y1="0" x2="{p}" y2="{size}" stroke="black"/>')
        out.append(f'<line x1="0" y1="{p}" x2="{size}" y2="{p}" stroke="black"/>')
    radius = CELL * 0.4
    for r in range(n):
        for c in range(n):
            cx, cy = c * CELL + CELL // 2, r * CELL + CELL // 2
            if pattern.circled_mask[r][c]:
                out.append(
                    f'<circle cx="{cx}" cy="{cy}" r="{radius:g}" fill="none" stroke="black"/>'
                )
            if grid is not None:
                out.append(
                    f'<text x="{cx}" y="{cy}" text-anchor="middle" '
                    f'dominant-baseline="central" font-size="{CELL // 2}">{grid.values[r][c]}</text>'
                )
    out.append("</svg>")
    return "\n".join(out)
