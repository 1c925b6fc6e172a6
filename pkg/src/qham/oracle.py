"""Classical Hamming distances, used as ground truth for the quantum path."""

from __future__ import annotations

from .errors import ValidationError


def hamming_bits(a: str, b: str) -> int:
    """Number of positions at which two equal-length bit strings differ.

    >>> hamming_bits("010", "101")
    3
    """
    if len(a) != len(b):
        raise ValidationError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x != y for x, y in zip(a, b))


def hamming_symbols(a: str, b: str, d: int) -> int:
    """Number of differing ``d``-bit blocks.

    >>> hamming_symbols("000000", "111100", 2)
    2
    """
    if len(a) != len(b):
        raise ValidationError(f"length mismatch: {len(a)} vs {len(b)}")
    if d < 1 or len(a) % d:
        raise ValidationError(f"length {len(a)} is not divisible by symbol width {d}")
    return sum(a[i:i + d] != b[i:i + d] for i in range(0, len(a), d))


def compare_classical(problem) -> list[int]:
    """Symbol-level distance from the target to every original database entry."""
    per_pattern = [hamming_symbols(problem.target_bits, p, problem.d) for p in problem.db_bits]
    return [per_pattern[k] for k in problem.origin_map]
