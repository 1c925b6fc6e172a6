"""Probabilistic quantum memory: storage and bit/symbol-level retrieval circuits.

Register layout (fixed, low to high qubit index)::

    memory  0 .. n-1        qubit j-1 holds m_j
    h       n .. n+z-1      one flag per symbol
    u1      n+z             storage utility qubit, reused as the control qubit c
    u2      n+z+1           storage utility qubit

The target pattern stays classical, so every gate it would control is
either applied unconditionally or dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import statevector as sv
from .errors import ValidationError
from .statevector import SingleQubitDiagonal, Statevector, TwoLevelUnitary

EXACT = "exact"
SAMPLED = "sampled"


@dataclass(frozen=True)
class RegisterLayout:
    n: int
    d: int

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise ValidationError(f"need n >= 1 and d >= 1, got n={self.n}, d={self.d}")
        if self.n % self.d:
            raise ValidationError(f"pattern length {self.n} is not divisible by symbol width {self.d}")

    @property
    def z(self) -> int:
        return self.n // self.d

    @property
    def memory_qubits(self) -> list[int]:
        return list(range(self.n))

    @property
    def h_qubits(self) -> list[int]:
        return list(range(self.n, self.n + self.z))

    @property
    def u1_qubit(self) -> int:
        return self.n + self.z

    @property
    def c_qubit(self) -> int:
        return self.u1_qubit

    @property
    def u2_qubit(self) -> int:
        return self.n + self.z + 1

    @property
    def num_qubits(self) -> int:
        return self.n + self.z + 2

    def symbol_block(self, j: int) -> list[int]:
        """Memory qubits of symbol ``j`` (0-based)."""
        return list(range(self.d * j, self.d * (j + 1)))


@dataclass(frozen=True)
class Gate:
    """One abstract gate.

    ``kind`` is ``"x"`` (multi-controlled when ``controls`` is non-empty),
    ``"h"``, ``"diag"`` (``params = (phase0, phase1)``) or ``"split"``
    (controlled storage rotation S^j, ``params = (j,)``).
    """

    kind: str
    target: int
    controls: tuple[int, ...] = ()
    params: tuple = ()
    step: str = ""


def split_matrix(j: int) -> TwoLevelUnitary:
    """S^j = [[sqrt((j-1)/j), 1/sqrt(j)], [-1/sqrt(j), sqrt((j-1)/j)]]."""
    if j < 1:
        raise ValidationError(f"split index must be >= 1, got {j}")
    a = math.sqrt((j - 1) / j)
    b = 1.0 / math.sqrt(j)
    return TwoLevelUnitary(a, b, -b, a)


def apply_gate(state: Statevector, gate: Gate) -> Statevector:
    if gate.kind == "x":
        return sv.apply_mcx(state, gate.controls, gate.target)
    if gate.kind == "h":
        return sv.apply_h(state, gate.target)
    if gate.kind == "diag":
        return sv.apply_diag(state, gate.target, SingleQubitDiagonal(*gate.params), gate.controls)
    if gate.kind == "split":
        (control,) = gate.controls
        return sv.apply_c2x2(state, control, gate.target, split_matrix(gate.params[0]))
    raise ValidationError(f"unknown gate kind {gate.kind!r}")


def replay(gates: Iterable[Gate], num_qubits: int, state: Statevector | None = None) -> Statevector:
    state = sv.new_state(num_qubits) if state is None else state
    for g in gates:
        apply_gate(state, g)
    return state


# -- storage ---------------------------------------------------------------


def _check_patterns(patterns: Sequence[str]) -> int:
    if len(patterns) == 0:
        raise ValidationError("cannot store an empty set of patterns")
    n = len(patterns[0])
    for i, p in enumerate(patterns):
        if len(p) != n:
            raise ValidationError(f"pattern {i} has length {len(p)}, expected {n}", index=i)
        if set(p) - {"0", "1"}:
            raise ValidationError(f"pattern {i} is not a 0/1 string: {p!r}", index=i)
    seen = {}
    for i, p in enumerate(patterns):
        if p in seen:
            raise ValidationError(f"pattern {i} duplicates pattern {seen[p]} ({p})", index=i)
        seen[p] = i
    return n


def storage_gates(patterns: Sequence[str], layout: RegisterLayout) -> list[Gate]:
    """Gate sequence loading ``patterns`` into an equal superposition on the memory.

    Starts from |0...0> with u2 flipped to 1. Pattern k is written into the
    u2=1 ("processing") branch, then a controlled S^(r+1-k) peels weight
    1/sqrt(r) off into u2=0, where the pattern stays.
    """
    r = len(patterns)
    mem, u1, u2 = layout.memory_qubits, layout.u1_qubit, layout.u2_qubit
    gates = [Gate("x", u2, step="storage-init")]
    for k, p in enumerate(patterns):
        tag = f"storage-{k}"
        ones = [mem[j] for j, b in enumerate(p) if b == "1"]
        zeros = [mem[j] for j, b in enumerate(p) if b == "0"]
        load = [Gate("x", q, (u2,), step=tag) for q in ones]
        align = [Gate("x", q, step=tag) for q in zeros]
        flag = Gate("x", u1, tuple(mem), step=tag)
        gates += load + align + [flag]
        gates.append(Gate("split", u2, (u1,), (r - k,), step=tag))
        gates += [flag] + align[::-1] + load[::-1]
    return gates


def direct_storage_state(patterns: Sequence[str], layout: RegisterLayout) -> Statevector:
    state = sv.new_state(layout.num_qubits)
    state.amplitudes[0] = 0.0
    amp = 1.0 / math.sqrt(len(patterns))
    for p in patterns:
        # m_1 is qubit 0, i.e. the least significant bit of the index
        state.amplitudes[int(p[::-1], 2)] = amp
    return state


@dataclass(frozen=True)
class StoredMemory:
    layout: RegisterLayout
    state: Statevector = field(repr=False)
    patterns: tuple[str, ...]

    @property
    def r(self) -> int:
        return len(self.patterns)

    def fresh_state(self) -> Statevector:
        """A private copy of the post-storage state."""
        return self.state.copy()


def store_patterns(patterns: Sequence[str], mode: str = "direct", d: int = 1) -> StoredMemory:
    """Load distinct equal-length bit patterns into a memory register.

    ``mode="gate"`` runs the storage circuit; ``mode="direct"`` writes the
    resulting superposition analytically.
    """
    patterns = tuple(patterns)
    n = _check_patterns(patterns)
    layout = RegisterLayout(n, d)
    if mode == "direct":
        state = direct_storage_state(patterns, layout)
    elif mode in ("gate", "gate-level"):
        state = replay(storage_gates(patterns, layout), layout.num_qubits)
    else:
        raise ValidationError(f"unknown storage mode {mode!r}")
    return StoredMemory(layout, state, patterns)


# -- retrieval ---------------------------------------------------------------


def _check_target(target: str, layout: RegisterLayout) -> None:
    if len(target) != layout.n:
        raise ValidationError(f"target has length {len(target)}, memory holds {layout.n}-bit patterns",
                              field="target")
    if set(target) - {"0", "1"}:
        raise ValidationError(f"target is not a 0/1 string: {target!r}", field="target")


def _contract_target(target: str, layout: RegisterLayout, step: str) -> list[Gate]:
    # CNOT(s_j -> m_j) then X(m_j) with s_j classical: X survives iff s_j == 0
    return [Gate("x", layout.memory_qubits[j], step=step) for j, s in enumerate(target) if s == "0"]


def _phase_block(qubits: Sequence[int], width: int, c: int, step: str) -> list[Gate]:
    # diag(e^{i pi/2w}, 1) on each qubit, then diag(e^{-i pi/w}, 1) controlled by c
    phase = math.pi / (2 * width)
    gates = [Gate("diag", q, (), (phase, 0.0), step=step) for q in qubits]
    gates += [Gate("diag", q, (c,), (-2 * phase, 0.0), step=step) for q in qubits]
    return gates


def bitlevel_gates(layout: RegisterLayout, target: str) -> list[Gate]:
    _check_target(target, layout)
    c = layout.c_qubit
    step1 = _contract_target(target, layout, "step1")
    gates = [Gate("h", c, step="prepare-c")]
    gates += step1
    gates += _phase_block(layout.memory_qubits, layout.n, c, "step2")
    gates += [Gate(g.kind, g.target, g.controls, g.params, "step3") for g in reversed(step1)]
    gates.append(Gate("h", c, step="step3"))
    return gates


def symbollevel_gates(layout: RegisterLayout, target: str, d: int | None = None) -> list[Gate]:
    _check_target(target, layout)
    if d is not None and d != layout.d:
        raise ValidationError(f"memory was laid out for d={layout.d}, retrieval asked for d={d}")
    c, h = layout.c_qubit, layout.h_qubits
    gates = [Gate("h", c, step="prepare-c")]
    gates += [Gate("x", q, step="prepare-h") for q in h]
    step1 = _contract_target(target, layout, "step1")
    gates += step1
    step2 = []
    for j, hq in enumerate(h):
        step2.append(Gate("x", hq, tuple(layout.symbol_block(j)), step="step2"))
        step2.append(Gate("x", hq, step="step2"))
    gates += step2
    gates += _phase_block(h, layout.z, c, "step3")
    gates += [Gate(g.kind, g.target, g.controls, g.params, "step4") for g in reversed(step2)]
    gates += [Gate(g.kind, g.target, g.controls, g.params, "step5") for g in reversed(step1)]
    gates.append(Gate("h", c, step="step5"))
    return gates


def retrieve_bitlevel(memory: StoredMemory, target: str) -> Statevector:
    """Bit-level retrieval; the h register is left untouched in |0...0>."""
    return replay(bitlevel_gates(memory.layout, target), memory.layout.num_qubits, memory.fresh_state())


def retrieve_symbollevel(memory: StoredMemory, target: str, d: int | None = None) -> Statevector:
    return replay(symbollevel_gates(memory.layout, target, d), memory.layout.num_qubits, memory.fresh_state())


def circuit_trace(memory: StoredMemory, target: str, d: int | None = None) -> list[Gate]:
    """Full gate list, storage included, starting from |0...0>."""
    layout = memory.layout
    return storage_gates(memory.patterns, layout) + symbollevel_gates(layout, target, d)


# -- execution ---------------------------------------------------------------


@dataclass
class RawRunResult:
    mode: str
    c0_probability: float | None = None
    memory_stats: dict[str, float] | dict[str, int] = field(default_factory=dict)
    c0_count: int | None = None
    total_shots: int | None = None
    seed: int | None = None
    joint: dict[str, float] = field(default_factory=dict)

    @property
    def post_selection_failed(self) -> bool:
        if self.mode == EXACT:
            return self.c0_probability < 1e-12
        return self.c0_count == 0


def joint_distribution(state: Statevector, layout: RegisterLayout) -> dict[str, float]:
    """P(c, memory) keyed by ``c`` followed by ``m_1 ... m_n``."""
    return sv.marginal_distribution(state, [layout.c_qubit, *layout.memory_qubits])


def run_comparison(
    memory: StoredMemory,
    target: str,
    d: int | None = None,
    execution: str = EXACT,
    shots: int = 8192,
    seed: int = 0,
    algorithm: str = "symbol",
) -> RawRunResult:
    """Run retrieval and post-select on c = 0.

    ``algorithm="bit"`` uses bit-level retrieval and ignores ``d``. Sampled
    mode discards c = 1 shots rather than retrying them.
    """
    if algorithm == "symbol":
        state = retrieve_symbollevel(memory, target, d)
    elif algorithm == "bit":
        state = retrieve_bitlevel(memory, target)
    else:
        raise ValidationError(f"unknown retrieval algorithm {algorithm!r}", field="algorithm")
    joint = joint_distribution(state, memory.layout)
    if execution == EXACT:
        c0 = float(sv.probabilities(state, [memory.layout.c_qubit]).item(0))
        stats = {}
        if c0 >= 1e-12:
            stats = {key[1:]: p / c0 for key, p in joint.items() if key[0] == "0"}
        return RawRunResult(EXACT, c0_probability=c0, memory_stats=stats, joint=joint)
    if execution == SAMPLED:
        counts = sv.sample(joint, shots, seed)
        stats = {key[1:]: k for key, k in counts.items() if key[0] == "0"}
        return RawRunResult(
            SAMPLED,
            memory_stats=stats,
            c0_count=sum(stats.values()),
            total_shots=shots,
            seed=seed,
            joint=joint,
        )
    raise ValidationError(f"unknown execution mode {execution!r}", field="execution")


def equal_up_to_global_phase(a: np.ndarray, b: np.ndarray, atol: float = 1e-9) -> bool:
    i = int(np.argmax(np.abs(b)))
    if abs(b[i]) < atol:
        return bool(np.max(np.abs(a)) <= atol)
    phase = a[i] / b[i]
    if abs(abs(phase) - 1.0) > atol:
        return False
    return bool(np.max(np.abs(a - phase * b)) <= atol)
