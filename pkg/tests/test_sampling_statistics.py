"""Sampled-mode error rates agree with the binomial model of the estimator."""

import math

import numpy as np
from scipy.stats import binom

from qham.api import prepare
from qham.estimator import estimate
from qham.pqm import SAMPLED, run_comparison

from conftest import WORKED_EXAMPLES


def misread_probability(shots, r, z, D):
    """P(round((z/pi) acos(2 r K / N - 1)) != D) for K ~ Binomial(N, cos^2(pi D / 2z) / r)."""
    p = math.cos(math.pi * D / (2 * z)) ** 2 / r
    k = np.arange(shots + 1)
    est = np.floor(z / np.pi * np.arccos(np.clip(2 * r * k / shots - 1, -1, 1)) + 0.5)
    return float(binom.pmf(k, shots, p)[est != D].sum())


def test_zero_distance_misread_rate_matches_binomial():
    name, target, db, binary, k, shots, expected = WORKED_EXAMPLES[0]  # coverage, D[0] = 0
    problem, memory = prepare(target, db, binary, k)
    p_miss = misread_probability(shots, problem.r, problem.z, 0)
    trials = 600
    misses = 0
    for seed in range(1000, 1000 + trials):
        raw = run_comparison(memory, problem.target_bits, problem.d, SAMPLED, shots=shots, seed=seed)
        misses += estimate(raw, problem).distances[0] != 0
    sigma = math.sqrt(trials * p_miss * (1 - p_miss))
    assert 0.05 < p_miss < 0.15
    assert abs(misses - trials * p_miss) < 5 * sigma


def test_far_from_boundary_entries_are_stable():
    # every non-zero worked-example distance sits many standard deviations from a rounding boundary
    for name, target, db, binary, k, shots, expected in WORKED_EXAMPLES:
        problem, _ = prepare(target, db, binary, k)
        for D in expected:
            if D > 0:
                assert misread_probability(shots, problem.r, problem.z, D) < 1e-6, (name, D)
