"""The Pulsar sequence: blocks, the dual map, terms and prefixes.

Block ``i`` is read off the ``i x i`` spiral: its j-th entry is one more than
the number of uncircled cells in column j. Blocks are cached per index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from pulsar.spiral import build_pattern

# The block as printed in the source display. It is not a permutation of 1..8
# and breaks the symmetric sums, so the derived block is used instead.
PRINTED_BLOCK_8 = (8, 2, 6, 5, 6, 3, 7, 1)

# The opening display, terms 1..34 as printed (the tail carries the same typo).
PRINTED_PREFIX = (
    1, 2, 1, 3, 2, 1, 4, 2, 3, 1, 5, 2, 3, 4, 1, 6, 2, 4, 3, 5, 1,
    7, 2, 5, 4, 3, 6, 1, 8, 2, 6, 5, 6, 3,
)


@dataclass(frozen=True)
class Block:
    index: int
    entries: tuple[int, ...]

    def symmetric_sums_ok(self) -> bool:
        i = self.index
        return all(a + b == i + 1 for a, b in zip(self.entries, reversed(self.entries)))

    def is_permutation(self) -> bool:
        return sorted(self.entries) == list(range(1, self.index + 1))


def _check_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


def dual(x: int, n: int) -> int:
    """Order-reversing involution on 1..n."""
    _check_positive("n", n)
    if not 1 <= x <= n:
        raise ValueError(f"dual needs 1 <= x <= n, got x={x}, n={n}")
    return n + 1 - x


@lru_cache(maxsize=None)
def block(i: int) -> Block:
    _check_positive("block index", i)
    pattern = build_pattern(i)
    uncircled_per_col = [0] * i
    for _, c in pattern.uncircled_walk():
        uncircled_per_col[c - 1] += 1
    return Block(i, tuple(1 + u for u in uncircled_per_col))


def dual_block(i: int, n: int) -> list[int]:
    """Block ``i`` with every entry sent through ``dual(., n)``."""
    _check_positive("block index", i)
    if i > n:
        raise ValueError(f"dual_block needs i <= n, got i={i}, n={n}")
    return [n + 1 - a for a in block(i).entries]


def block_of_position(k: int) -> tuple[int, int]:
    """Return ``(i, j)``: term k is entry j (1-based) of block i."""
    _check_positive("term position", k)
    i = (math.isqrt(8 * k) - 1) // 2
    while i * (i + 1) // 2 < k:
        i += 1
    return i, k - i * (i - 1) // 2


def nth_term(k: int) -> int:
    i, j = block_of_position(k)
    return block(i).entries[j - 1]


def prefix(m: int) -> list[int]:
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"prefix length must be a non-negative integer, got {m!r}")
    terms: list[int] = []
    i = 1
    while len(terms) < m:
        terms.extend(block(i).entries)
        i += 1
    return terms[:m]


def printed_divergences(upto: int = len(PRINTED_PREFIX)) -> list[tuple[int, int, int]]:
    """Positions where the printed opening display disagrees with the derived terms.

    Returns ``(position, printed, derived)`` triples.
    """
    derived = prefix(upto)
    return [
        (k, p, d)
        for k, (p, d) in enumerate(zip(PRINTED_PREFIX[:upto], derived), start=1)
        if p != d
    ]


def block_from_top_row(top_row: list[int]) -> list[int]:
    """Recover block n from the top row of an n x n solution.

    The top row read right to left is the dual of the block.
    """
    n = len(top_row)
    return [n + 1 - v for v in reversed(top_row)]
