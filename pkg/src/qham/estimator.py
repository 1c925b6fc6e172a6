"""Turn post-selected measurement statistics into Hamming distances.

Forward model: with r distinct stored patterns and z symbols,

    P(c=0)            = (1/r) * sum_k cos^2(pi * D_k / (2z))
    P(p_k | c=0)      = cos^2(pi * D_k / (2z)) / (r * P(c=0))

Inverting the second line gives D_k = (z/pi) * arccos(2 * P(c=0) * r * P(p_k | c=0) - 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .encoding import EncodedProblem
from .errors import ValidationError
from .pqm import EXACT, SAMPLED, RawRunResult

POST_SELECTION_WARNING = (
    "post-selection impossible: P(c=0) is zero, so every stored pattern is at maximal distance z"
)


@dataclass
class ComparisonResult:
    distances: list[int]
    p_values: list[float]
    c0_probability: float
    mode: str
    n: int
    d: int
    z: int
    r: int
    patterns: list[str] = field(default_factory=list)
    origin_map: list[int] = field(default_factory=list)
    shots: int | None = None
    c0_count: int | None = None
    seed: int | None = None
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "distances": list(self.distances),
            "p_values": list(self.p_values),
            "c0": self.c0_probability,
            "c0_count": self.c0_count,
            "n": self.n,
            "d": self.d,
            "z": self.z,
            "r": self.r,
            "patterns": list(self.patterns),
            "origin_map": list(self.origin_map),
            "mode": self.mode,
            "shots": self.shots,
            "seed": self.seed,
            "warnings": list(self.warnings),
        }


def round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def distance_from_argument(arg: float, z: int) -> int:
    """round((z/pi) * arccos(clamp(arg, -1, 1)))."""
    arg = min(1.0, max(-1.0, arg))
    return round_half_up(z / math.pi * math.acos(arg))


def _result(problem: EncodedProblem, raw: RawRunResult, per_pattern, p_values, c0, warnings) -> ComparisonResult:
    return ComparisonResult(
        distances=[per_pattern[k] for k in problem.origin_map],
        p_values=p_values,
        c0_probability=c0,
        mode=raw.mode,
        n=problem.n,
        d=problem.d,
        z=problem.z,
        r=problem.r,
        patterns=list(problem.db_bits),
        origin_map=list(problem.origin_map),
        shots=raw.total_shots,
        c0_count=raw.c0_count,
        seed=raw.seed,
        warnings=warnings,
    )


def estimate_exact(raw: RawRunResult, problem: EncodedProblem) -> ComparisonResult:
    if raw.mode != EXACT:
        raise ValidationError(f"estimate_exact needs an exact-mode run, got {raw.mode!r}")
    z, r = problem.z, problem.r
    c0 = raw.c0_probability
    if raw.post_selection_failed:
        return _result(problem, raw, [z] * r, [0.0] * r, c0, [POST_SELECTION_WARNING])
    p_values = [raw.memory_stats.get(p, 0.0) for p in problem.db_bits]
    per_pattern = [
        z if p == 0.0 else distance_from_argument(2.0 * c0 * r * p - 1.0, z)
        for p in p_values
    ]
    return _result(problem, raw, per_pattern, p_values, c0, [])


def estimate_sampled(raw: RawRunResult, problem: EncodedProblem) -> ComparisonResult:
    """Sampled-mode estimate.

    c-hat * P-hat(p_k) collapses to count_k / N, so the estimator only needs
    the raw count of each pattern among the N total shots.
    """
    if raw.mode != SAMPLED:
        raise ValidationError(f"estimate_sampled needs a sampled-mode run, got {raw.mode!r}")
    if not raw.total_shots or raw.total_shots < 1:
        raise ValidationError("sampled run has no shots")
    z, r, shots = problem.z, problem.r, raw.total_shots
    c0_count = raw.c0_count
    c0 = c0_count / shots
    if raw.post_selection_failed:
        return _result(problem, raw, [z] * r, [0.0] * r, c0, [POST_SELECTION_WARNING])
    counts = [raw.memory_stats.get(p, 0) for p in problem.db_bits]
    warnings = []
    per_pattern = []
    for k, count in enumerate(counts):
        if count == 0:
            warnings.append(f"zero-count: pattern {k} ({problem.db_bits[k]}) never observed with c=0; D set to z")
            per_pattern.append(z)
        else:
            per_pattern.append(distance_from_argument(2.0 * r * count / shots - 1.0, z))
    p_values = [count / c0_count for count in counts]
    return _result(problem, raw, per_pattern, p_values, c0, warnings)


def estimate(raw: RawRunResult, problem: EncodedProblem) -> ComparisonResult:
    return estimate_exact(raw, problem) if raw.mode == EXACT else estimate_sampled(raw, problem)


def analytic_distribution(distances: Sequence[int], r: int, z: int):
    """Closed-form (c0, conditional probabilities) for the given per-pattern distances.

    The conditional list is ``None`` when c0 is zero (every D_k equals z).
    """
    if len(distances) != r:
        raise ValidationError(f"expected {r} distances, got {len(distances)}")
    for k, D in enumerate(distances):
        if not 0 <= D <= z:
            raise ValidationError(f"distance {D} at position {k} is outside [0, {z}]", index=k)
    weights = [math.cos(math.pi * D / (2 * z)) ** 2 for D in distances]
    c0 = sum(weights) / r
    if c0 < 1e-12:
        return 0.0, None
    return c0, [w / (r * c0) for w in weights]
