"""Dense statevector simulator.

Qubit ``i`` is bit ``i`` (least significant first) of the amplitude index.
Every kernel works in place on a ``(2,) * num_qubits`` view of the
amplitude array: fixing the control axes to 1 and the target axis to 0/1
yields two strided views that are updated in a single pass.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import CapacityError, PostSelectionError, ValidationError

DEFAULT_MAX_QUBITS = 26
MAX_QUBITS_ENV = "QHAM_MAX_QUBITS"

_SQRT1_2 = 1.0 / math.sqrt(2.0)


def max_qubits() -> int:
    """Current qubit ceiling, honouring ``QHAM_MAX_QUBITS``."""
    raw = os.environ.get(MAX_QUBITS_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_QUBITS
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(f"{MAX_QUBITS_ENV}={raw!r} is not an integer", field=MAX_QUBITS_ENV)
    if value < 1:
        raise ValidationError(f"{MAX_QUBITS_ENV} must be positive, got {value}", field=MAX_QUBITS_ENV)
    return value


@dataclass(frozen=True)
class SingleQubitDiagonal:
    """diag(exp(i*phase0), exp(i*phase1))."""

    phase0: float
    phase1: float = 0.0

    def inverse(self) -> "SingleQubitDiagonal":
        return SingleQubitDiagonal(-self.phase0, -self.phase1)

    def power(self, k: float) -> "SingleQubitDiagonal":
        return SingleQubitDiagonal(k * self.phase0, k * self.phase1)


@dataclass(frozen=True)
class TwoLevelUnitary:
    """A 2x2 matrix [[m00, m01], [m10, m11]] checked for unitarity on use."""

    m00: complex
    m01: complex
    m10: complex
    m11: complex

    def as_array(self) -> np.ndarray:
        return np.array([[self.m00, self.m01], [self.m10, self.m11]], dtype=complex)

    def is_unitary(self, tol: float = 1e-12) -> bool:
        m = self.as_array()
        return bool(np.max(np.abs(m @ m.conj().T - np.eye(2))) <= tol)


class Statevector:
    """``2**num_qubits`` complex amplitudes, mutated in place by the gate kernels."""

    __slots__ = ("num_qubits", "amplitudes")

    def __init__(self, num_qubits: int, amplitudes: np.ndarray):
        amplitudes = np.asarray(amplitudes, dtype=np.complex128)
        if amplitudes.shape != (1 << num_qubits,):
            raise ValidationError(
                f"expected {1 << num_qubits} amplitudes for {num_qubits} qubits, got shape {amplitudes.shape}"
            )
        self.num_qubits = num_qubits
        self.amplitudes = amplitudes

    def copy(self) -> "Statevector":
        return Statevector(self.num_qubits, self.amplitudes.copy())

    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def amplitude(self, index: int) -> complex:
        return complex(self.amplitudes[index])

    def tensor(self) -> np.ndarray:
        # axis 0 is the most significant qubit
        return self.amplitudes.reshape((2,) * self.num_qubits)

    def _axis(self, qubit: int) -> int:
        return self.num_qubits - 1 - qubit

    def sub_amplitudes(self, fixed: Mapping[int, int]) -> np.ndarray:
        """Amplitudes with the qubits in ``fixed`` pinned to the given bits.

        The result is indexed like a statevector over the remaining qubits,
        in their original relative order.
        """
        _check_indices(self, list(fixed))
        idx = [slice(None)] * self.num_qubits
        for q, bit in fixed.items():
            idx[self._axis(q)] = int(bit)
        return np.ascontiguousarray(self.tensor()[tuple(idx)]).reshape(-1)

    def __repr__(self) -> str:
        return f"Statevector(num_qubits={self.num_qubits})"


def new_state(num_qubits: int, ceiling: int | None = None) -> Statevector:
    limit = max_qubits() if ceiling is None else ceiling
    if num_qubits < 1:
        raise ValidationError(f"need at least one qubit, got {num_qubits}")
    if num_qubits > limit:
        raise CapacityError(
            f"{num_qubits} qubits exceeds the simulator ceiling of {limit} "
            f"(raise it with {MAX_QUBITS_ENV})"
        )
    amps = np.zeros(1 << num_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return Statevector(num_qubits, amps)


def _check_indices(state: Statevector, qubits: Sequence[int]) -> None:
    for q in qubits:
        if not isinstance(q, (int, np.integer)) or not 0 <= q < state.num_qubits:
            raise ValidationError(f"qubit index {q!r} out of range for {state.num_qubits} qubits")
    if len(set(qubits)) != len(qubits):
        raise ValidationError(f"duplicate qubit indices in {list(qubits)}")


def _views(state: Statevector, target: int, controls: Sequence[int] = ()):
    """Return (v0, v1): views of the target=0 / target=1 halves of the control=1 subspace."""
    controls = list(controls)
    if target in controls:
        raise ValidationError(f"target qubit {target} is also listed as a control")
    _check_indices(state, controls + [target])
    t = state.tensor()
    idx = [slice(None)] * state.num_qubits
    for c in controls:
        idx[state._axis(c)] = 1
    ax = state._axis(target)
    # trailing Ellipsis keeps a 0-d view when every axis is pinned
    idx[ax] = 0
    v0 = t[(*idx, ...)]
    idx[ax] = 1
    v1 = t[(*idx, ...)]
    return v0, v1


def apply_x(state: Statevector, qubit: int) -> Statevector:
    return apply_mcx(state, (), qubit)


def apply_mcx(state: Statevector, controls: Sequence[int], target: int) -> Statevector:
    """Flip ``target`` on every basis state whose ``controls`` are all 1."""
    v0, v1 = _views(state, target, controls)
    tmp = v0.copy()
    v0[...] = v1
    v1[...] = tmp
    return state


def apply_h(state: Statevector, qubit: int) -> Statevector:
    v0, v1 = _views(state, qubit)
    a0 = v0.copy()
    v0 += v1
    v0 *= _SQRT1_2
    v1 -= a0
    v1 *= -_SQRT1_2
    return state


def apply_diag(
    state: Statevector,
    qubit: int,
    gate: SingleQubitDiagonal,
    controls: Sequence[int] = (),
) -> Statevector:
    v0, v1 = _views(state, qubit, controls)
    if gate.phase0:
        v0 *= np.exp(1j * gate.phase0)
    if gate.phase1:
        v1 *= np.exp(1j * gate.phase1)
    return state


def apply_c2x2(state: Statevector, control: int, target: int, matrix: TwoLevelUnitary) -> Statevector:
    """Apply ``matrix`` to ``target`` on the control=1 subspace."""
    if not matrix.is_unitary():
        raise ValidationError(f"matrix is not unitary within 1e-12: {matrix}")
    v0, v1 = _views(state, target, [control])
    a0 = v0.copy()
    a1 = v1.copy()
    v0[...] = matrix.m00 * a0 + matrix.m01 * a1
    v1[...] = matrix.m10 * a0 + matrix.m11 * a1
    return state


def probabilities(state: Statevector, qubits: Sequence[int]) -> np.ndarray:
    """Dense marginal over ``qubits``; ``qubits[0]`` is the most significant bit of the index."""
    qubits = list(qubits)
    _check_indices(state, qubits)
    probs = np.abs(state.tensor()) ** 2
    keep = [state._axis(q) for q in qubits]
    drop = tuple(ax for ax in range(state.num_qubits) if ax not in keep)
    marg = probs.sum(axis=drop) if drop else probs
    # remaining axes are in ascending axis order; reorder to the caller's list
    remaining = sorted(keep)
    marg = np.transpose(marg, [remaining.index(ax) for ax in keep])
    return marg.reshape(-1)


def marginal_distribution(
    state: Statevector, qubits: Sequence[int], cutoff: float = 1e-14
) -> dict[str, float]:
    """Probability table keyed by bit strings; character ``i`` is the bit of ``qubits[i]``.

    Entries below ``cutoff`` (numerical zero) are omitted.
    """
    dense = probabilities(state, qubits)
    width = len(qubits)
    return {
        format(i, f"0{width}b"): float(p)
        for i, p in enumerate(dense)
        if p > cutoff
    }


def collapse(state: Statevector, qubit: int, outcome: int) -> Statevector:
    if outcome not in (0, 1):
        raise ValidationError(f"outcome must be 0 or 1, got {outcome!r}")
    v0, v1 = _views(state, qubit)
    keep, drop = (v0, v1) if outcome == 0 else (v1, v0)
    p = float(np.sum(np.abs(keep) ** 2))
    if p <= 1e-12:
        raise PostSelectionError(f"qubit {qubit} has probability {p:.3g} of measuring {outcome}")
    drop[...] = 0.0
    keep /= math.sqrt(p)
    return state


def sample(distribution: Mapping[str, float], shots: int, seed: int) -> dict[str, int]:
    """Draw ``shots`` outcomes from ``distribution`` with a PCG64 stream seeded by ``seed``.

    Outcomes are visited in sorted key order, so the result depends only on
    (distribution, shots, seed).
    """
    if shots < 1:
        raise ValidationError(f"shots must be >= 1, got {shots}", field="shots")
    if not 0 <= seed < 2**64:
        raise ValidationError(f"seed must be an unsigned 64-bit integer, got {seed}", field="seed")
    keys = sorted(distribution)
    pvals = np.array([distribution[k] for k in keys], dtype=float)
    if np.any(pvals < 0) or abs(pvals.sum() - 1.0) > 1e-9:
        raise ValidationError(f"distribution is not normalized (sum={pvals.sum():.12g})")
    pvals = pvals / pvals.sum()
    rng = np.random.Generator(np.random.PCG64(seed))
    counts = rng.multinomial(shots, pvals)
    return {k: int(c) for k, c in zip(keys, counts) if c}
