"""Exhaustive backtracking enumerator for spiral-circled Latin squares.

This is the independent uniqueness oracle. It knows only the two puzzle rules:
rows and columns are permutations, and a digit d that sits in any circle sits
in exactly d of them. That last rule is kept in its raw form (circled count in
{0, d}); the "exactly d of every digit" consequence is never assumed.

Cells are filled in a fixed order: circled pieces from largest to smallest,
each in spiral order, then uncircled cells row-major. Values are tried in
ascending order. A node is one value placed into a cell.

Two engines walk the same tree: a compiled kernel (default) and a plain Python
reference. They agree node for node.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from pulsar import _kernel
from pulsar.construct import Grid
from pulsar.spiral import CellCoord, Piece, SpiralPattern, build_pattern

MAX_N = 62  # values live in int64 bitmasks


class InferenceLevel(str, enum.Enum):
    L0 = "L0"  # row/column exclusion plus the circled-count cap
    L1 = "L1"  # L0 plus per-piece value windows


class SearchLimitError(ValueError):
    pass


@dataclass(frozen=True)
class SolveConfig:
    """Search settings.

    ``lookahead`` adds a sound per-line feasibility test after every placement:
    in each row and column the empty cells must admit pairwise distinct legal
    values. It uses only the Latin rule and the circled-count cap. It changes
    node counts, never the solution set.
    """

    inference_level: InferenceLevel = InferenceLevel.L0
    solution_cap: Optional[int] = None
    node_budget: Optional[int] = None
    lookahead: bool = False
    workers: int = 1
    engine: str = "kernel"

    def __post_init__(self):
        object.__setattr__(self, "inference_level", InferenceLevel(self.inference_level))
        for name in ("solution_cap", "node_budget"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"{name} must be positive or None, got {value}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.engine not in ("kernel", "python"):
            raise ValueError(f"unknown engine {self.engine!r}")


@dataclass
class SolveReport:
    solutions: list[Grid] = field(default_factory=list)
    count_exact: bool = True
    nodes_visited: int = 0
    elapsed: float = 0.0

    @property
    def count(self) -> int:
        return len(self.solutions)


@dataclass(frozen=True)
class _Layout:
    n: int
    order: tuple[tuple[int, int], ...]  # 0-based (row, col) in fill order
    circled: tuple[bool, ...]
    allowed: tuple[int, ...]  # bit v set means value v may go here
    n_circled: int
    lines: tuple[tuple[int, ...], ...]  # fill positions of rows 0..n-1, then cols


def _layout(pattern: SpiralPattern, level: InferenceLevel) -> _Layout:
    n = pattern.n
    if n > MAX_N:
        raise SearchLimitError(f"enumeration supports n <= {MAX_N}")
    everything = ((1 << n) - 1) << 1
    order, circled, allowed = [], [], []
    for piece in sorted(pattern.circled_pieces, key=lambda p: -p.length):
        if level is InferenceLevel.L1:
            # a piece of size s can only hold the s largest values
            mask = everything & ~((1 << (n - piece.length + 1)) - 1)
        else:
            mask = everything
        for r, c in piece.cells:
            order.append((r - 1, c - 1))
            circled.append(True)
            allowed.append(mask)
    n_circled = len(order)
    for r in range(n):
        for c in range(n):
            if not pattern.circled_mask[r][c]:
                order.append((r, c))
                circled.append(False)
                allowed.append(everything)
    if sorted(order) != [(r, c) for r in range(n) for c in range(n)]:
        raise ValueError("pattern pieces do not match its circled mask")
    lines = [tuple(q for q, (r, _) in enumerate(order) if r == i) for i in range(n)]
    lines += [tuple(q for q, (_, c) in enumerate(order) if c == j) for j in range(n)]
    return _Layout(n, tuple(order), tuple(circled), tuple(allowed), n_circled, tuple(lines))


class _Stop(Exception):
    pass


def _distinct_choice(domains: list[int]) -> bool:
    """Whether each domain can contribute a different value (bipartite matching)."""
    owner: dict[int, int] = {}

    def claim(i: int, seen: set[int]) -> bool:
        dom = domains[i]
        while dom:
            low = dom & -dom
            dom ^= low
            if low in seen:
                continue
            seen.add(low)
            if low not in owner or claim(owner[low], seen):
                owner[low] = i
                return True
        return False

    return all(claim(i, set()) for i in range(len(domains)))


class _PythonSearch:
    """Reference engine: the same walk as the kernel, written plainly."""

    def __init__(self, layout: _Layout, cap, budget, lookahead: bool):
        self.layout = layout
        self.cap = cap
        self.budget = budget
        self.lookahead = lookahead
        n = layout.n
        self.rows = [0] * n
        self.cols = [0] * n
        self.count = [0] * (n + 1)
        self.val = [0] * len(layout.order)
        self.nodes = 0
        self.solutions: list[Grid] = []
        self.exact = True

    def place(self, idx: int, v: int) -> None:
        r, c = self.layout.order[idx]
        self.rows[r] |= 1 << v
        self.cols[c] |= 1 << v
        if self.layout.circled[idx]:
            self.count[v] += 1
        self.val[idx] = v

    def unplace(self, idx: int, v: int) -> None:
        r, c = self.layout.order[idx]
        self.rows[r] &= ~(1 << v)
        self.cols[c] &= ~(1 << v)
        if self.layout.circled[idx]:
            self.count[v] -= 1
        self.val[idx] = 0

    def lines_alive(self, depth: int) -> bool:
        layout = self.layout
        n = layout.n
        capped = sum(1 << d for d in range(1, n + 1) if self.count[d] >= d)
        for line, positions in enumerate(layout.lines):
            domains = []
            for q in positions:
                if q < depth:
                    continue
                r, c = layout.order[q]
                dom = layout.allowed[q] & ~(self.rows[r] | self.cols[c])
                if layout.circled[q]:
                    dom &= ~capped
                if not dom:
                    return False
                domains.append(dom)
            if not domains:
                continue
            used = self.rows[line] if line < n else self.cols[line - n]
            missing = (((1 << n) - 1) << 1) & ~used
            cover = 0
            for dom in domains:
                cover |= dom
            if missing & ~cover or not _distinct_choice(domains):
                return False
        return True

    def grid(self) -> Grid:
        n = self.layout.n
        cells = [[0] * n for _ in range(n)]
        for (r, c), v in zip(self.layout.order, self.val):
            cells[r][c] = v
        return Grid.from_rows(cells)

    def run(self, idx: int) -> None:
        layout = self.layout
        if idx == layout.n_circled:
            # no circled cell is left, so the counts are final
            if any(k not in (0, d) for d, k in enumerate(self.count) if d):
                return
        if self.lookahead and idx > 0 and not self.lines_alive(idx):
            return
        if idx == len(layout.order):
            self.solutions.append(self.grid())
            if self.cap is not None and len(self.solutions) >= self.cap:
                self.exact = False
                raise _Stop
            return
        r, c = layout.order[idx]
        is_circled = layout.circled[idx]
        free = layout.allowed[idx] & ~(self.rows[r] | self.cols[c])
        while free:
            low = free & -free
            free ^= low
            v = low.bit_length() - 1
            if is_circled and self.count[v] >= v:
                continue
            if self.budget is not None and self.nodes >= self.budget:
                self.exact = False
                raise _Stop
            self.nodes += 1
            self.place(idx, v)
            self.run(idx + 1)
            self.unplace(idx, v)

    def solve(self, first_value: Optional[int] = None) -> None:
        try:
            if first_value is None:
                self.run(0)
            else:
                self.nodes = 1
                self.place(0, first_value)
                self.run(1)
        except _Stop:
            pass


class _KernelSearch:
    """Drives the compiled walk, collecting one solution per call."""

    def __init__(self, layout: _Layout, cap, budget, lookahead: bool):
        self.layout = layout
        self.cap = cap
        self.budget = -1 if budget is None else budget
        self.lookahead = lookahead
        n = layout.n
        total = len(layout.order)
        self.order_r = np.array([r for r, _ in layout.order], dtype=np.int64)
        self.order_c = np.array([c for _, c in layout.order], dtype=np.int64)
        self.circled = np.array(layout.circled, dtype=np.bool_)
        self.allowed = np.array(layout.allowed, dtype=np.int64)
        self.line_ptr = np.cumsum([0] + [len(x) for x in layout.lines]).astype(np.int64)
        self.line_idx = np.array([q for line in layout.lines for q in line], dtype=np.int64)
        self.rows = np.zeros(n, dtype=np.int64)
        self.cols = np.zeros(n, dtype=np.int64)
        self.count = np.zeros(n + 1, dtype=np.int64)
        self.val = np.zeros(total, dtype=np.int64)
        self.cand = np.zeros(total + 1, dtype=np.int64)
        self.st = np.array([0, 1, 0], dtype=np.int64)
        self.floor = 0
        self.solutions: list[Grid] = []
        self.exact = True

    @property
    def nodes(self) -> int:
        return int(self.st[2])

    def _walk(self) -> Iterator[Grid]:
        n = self.layout.n
        while True:
            status = _kernel.advance(
                self.order_r, self.order_c, self.circled, self.allowed,
                self.layout.n_circled, self.floor,
                self.rows, self.cols, self.count, self.val, self.cand, self.st,
                self.budget, self.lookahead, self.line_ptr, self.line_idx,
            )
            if status == _kernel.DONE:
                return
            if status == _kernel.BUDGET:
                self.exact = False
                return
            cells = [[0] * n for _ in range(n)]
            for r, c, v in zip(self.order_r, self.order_c, self.val):
                cells[r][c] = int(v)
            yield Grid.from_rows(cells)

    def solve(self, first_value: Optional[int] = None) -> None:
        if first_value is not None:
            bit = 1 << first_value
            self.rows[self.order_r[0]] |= bit
            self.cols[self.order_c[0]] |= bit
            if self.circled[0]:
                self.count[first_value] += 1
            self.val[0] = first_value
            self.st[:] = (1, 1, 1)
            self.floor = 1
        for grid in self._walk():
            self.solutions.append(grid)
            if self.cap is not None and len(self.solutions) >= self.cap:
                self.exact = False
                return


_ENGINES = {"kernel": _KernelSearch, "python": _PythonSearch}


def _solve_branch(args) -> tuple[list[tuple], int, bool]:
    pattern, config, first_value = args
    layout = _layout(pattern, config.inference_level)
    search = _ENGINES[config.engine](
        layout, config.solution_cap, config.node_budget, config.lookahead
    )
    search.solve(first_value)
    return [g.values for g in search.solutions], search.nodes, search.exact


def enumerate_solutions(pattern: SpiralPattern, config: SolveConfig = SolveConfig()) -> SolveReport:
    """Enumerate every grid satisfying the Latin and circle rules for ``pattern``.

    With ``workers > 1`` the first cell's candidate values are farmed out to
    processes and the branches merged in ascending value order. When the search
    runs to completion the solutions and node total equal the single-worker run;
    caps and budgets apply per branch, then the merged list is truncated.
    """
    start = time.perf_counter()
    layout = _layout(pattern, config.inference_level)
    report = SolveReport()

    if config.workers > 1:
        first = layout.allowed[0]
        jobs = [(pattern, config, v) for v in range(1, pattern.n + 1) if first >> v & 1]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for values, nodes, exact in pool.map(_solve_branch, jobs):
                report.solutions.extend(Grid(v) for v in values)
                report.nodes_visited += nodes
                report.count_exact &= exact
        if config.solution_cap is not None and report.count > config.solution_cap:
            del report.solutions[config.solution_cap:]
            report.count_exact = False
    else:
        search = _ENGINES[config.engine](
            layout, config.solution_cap, config.node_budget, config.lookahead
        )
        search.solve()
        report.solutions = search.solutions
        report.nodes_visited = search.nodes
        report.count_exact = search.exact

    report.elapsed = time.perf_counter() - start
    return report


def no_circles(n: int) -> SpiralPattern:
    """An n x n pattern without circles; only the Latin rule applies."""
    cells = tuple(CellCoord(r, c) for r in range(1, n + 1) for c in range(1, n + 1))
    return SpiralPattern(
        n=n,
        circled_mask=tuple((False,) * n for _ in range(n)),
        circled_pieces=(),
        uncircled_pieces=(Piece(1, cells),),
    )


LATIN_COUNT_LIMIT = 5


def count_latin_only(n: int, limit: int = LATIN_COUNT_LIMIT, engine: str = "kernel") -> int:
    """Number of n x n Latin squares, counted by the enumerator with circles ignored."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n > limit:
        raise SearchLimitError(f"count_latin_only is limited to n <= {limit}, got {n}")
    return enumerate_solutions(no_circles(n), SolveConfig(engine=engine)).count
