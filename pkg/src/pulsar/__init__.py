"""Pulsar puzzles: spiral-circled Latin squares and the Pulsar sequence."""

from pulsar.construct import Grid, VerifyReport, construct_direct, construct_recursive, verify
from pulsar.search import SolveConfig, SolveReport, count_latin_only, enumerate_solutions
from pulsar.sequence import Block, block, dual, dual_block, nth_term, prefix
from pulsar.spiral import CellCoord, Piece, SpiralPattern, build_pattern

__all__ = [
    "Block",
    "CellCoord",
    "Grid",
    "Piece",
    "SolveConfig",
    "SolveReport",
    "SpiralPattern",
    "VerifyReport",
    "block",
    "build_pattern",
    "construct_direct",
    "construct_recursive",
    "count_latin_only",
    "dual",
    "dual_block",
    "enumerate_solutions",
    "nth_term",
    "prefix",
    "verify",
]
