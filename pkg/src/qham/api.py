"""End-to-end comparison pipeline: encode, store, retrieve, estimate."""

from __future__ import annotations

import secrets

from .encoding import EncodedProblem, validate_and_encode
from .estimator import ComparisonResult, estimate
from .pqm import EXACT, SAMPLED, StoredMemory, circuit_trace, run_comparison, store_patterns
from .qasm import to_qasm

DEFAULT_SHOTS = 8192


def new_seed() -> int:
    return secrets.randbits(64)


def prepare(target, db, is_binary=True, symbol_length=1, storage="direct") -> tuple[EncodedProblem, StoredMemory]:
    problem = validate_and_encode(target, db, binary_mode=is_binary, symbol_length=symbol_length)
    memory = store_patterns(problem.db_bits, mode=storage, d=problem.d)
    return problem, memory


def compare_strings(
    target,
    db,
    is_binary: bool = True,
    symbol_length: int = 1,
    shots: int = DEFAULT_SHOTS,
    seed: int | None = None,
    exact: bool = False,
    storage: str = "direct",
) -> ComparisonResult:
    """Estimate the symbol-level Hamming distance from ``target`` to each entry of ``db``.

    >>> compare_strings("10110", ["10110", "11010", "01110", "01001"], exact=True).distances
    [0, 2, 2, 5]
    """
    problem, memory = prepare(target, db, is_binary, symbol_length, storage)
    if exact:
        raw = run_comparison(memory, problem.target_bits, problem.d, EXACT)
    else:
        seed = new_seed() if seed is None else seed
        raw = run_comparison(memory, problem.target_bits, problem.d, SAMPLED, shots=shots, seed=seed)
    result = estimate(raw, problem)
    if exact:
        result.seed = seed
    return result


def export_qasm(target, db, is_binary: bool = True, symbol_length: int = 1) -> str:
    problem, memory = prepare(target, db, is_binary, symbol_length)
    gates = circuit_trace(memory, problem.target_bits, problem.d)
    comment = (
        f"n={problem.n} d={problem.d} z={problem.z} r={problem.r}\n"
        f"target {problem.target_bits}\n"
        + "\n".join(f"pattern {k} {p}" for k, p in enumerate(problem.db_bits))
    )
    return to_qasm(gates, memory.layout, comment)
