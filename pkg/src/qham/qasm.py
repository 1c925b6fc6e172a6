"""OpenQASM 3 export of a comparison circuit, plus a reader for the emitted subset.

Phase gates that act on |0> (the retrieval's U and W) are declared once as
``p0(theta) = x; p(theta); x`` so each trace record maps to exactly one
statement, controlled or not. Each storage rotation S^j is declared as its
own gate ``split_j``.
"""

from __future__ import annotations

import math
import re
from typing import Sequence

from .errors import ValidationError
from .pqm import Gate, RegisterLayout

HEADER = 'OPENQASM 3.0;\ninclude "stdgates.inc";\n'
P0_DECL = "gate p0(theta) a { x a; p(theta) a; x a; }\n"


def split_angle(j: int) -> float:
    """ry angle equal to S^j: ry(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]."""
    return -2.0 * math.asin(1.0 / math.sqrt(j))


def _q(i: int) -> str:
    return f"q[{i}]"


def _statement(g: Gate) -> str:
    ctrl = ", ".join(_q(c) for c in g.controls)
    operands = f"{ctrl}, {_q(g.target)}" if ctrl else _q(g.target)
    k = len(g.controls)
    if g.kind == "x":
        if k == 0:
            return f"x {operands};"
        if k == 1:
            return f"cx {operands};"
        return f"ctrl({k}) @ x {operands};"
    if g.kind == "h":
        return f"h {operands};"
    if g.kind == "diag":
        phase0, phase1 = g.params
        if phase1:
            raise ValidationError("only diag(e^{i*theta}, 1) gates can be exported")
        mod = "" if k == 0 else ("ctrl @ " if k == 1 else f"ctrl({k}) @ ")
        return f"{mod}p0({phase0!r}) {operands};"
    if g.kind == "split":
        return f"ctrl @ split_{g.params[0]} {operands};"
    raise ValidationError(f"cannot export gate kind {g.kind!r}")


def to_qasm(gates: Sequence[Gate], layout: RegisterLayout, comment: str | None = None) -> str:
    lines = [HEADER]
    if comment:
        lines.extend(f"// {line}\n" for line in comment.splitlines())
    lines.append(
        f"// layout: memory q[0..{layout.n - 1}], h q[{layout.n}..{layout.n + layout.z - 1}], "
        f"c/u1 q[{layout.u1_qubit}], u2 q[{layout.u2_qubit}]\n"
    )
    lines.append(P0_DECL)
    for j in sorted({g.params[0] for g in gates if g.kind == "split"}, reverse=True):
        lines.append(f"gate split_{j} a {{ ry({split_angle(j)!r}) a; }}\n")
    lines.append(f"qubit[{layout.num_qubits}] q;\n")
    lines.append(f"bit[{layout.n + 1}] out;\n")
    lines.extend(_statement(g) + "\n" for g in gates)
    lines.append(f"out[0] = measure {_q(layout.c_qubit)};\n")
    for j in range(layout.n):
        lines.append(f"out[{j + 1}] = measure {_q(j)};\n")
    return "".join(lines)


_QUBITS_RE = re.compile(r"^qubit\[(\d+)\]\s+q;$")
_STMT_RE = re.compile(r"^(?:(ctrl)(?:\((\d+)\))?\s*@\s*)?(\w+)(?:\(([^)]*)\))?\s+(.+);$")
_OPERAND_RE = re.compile(r"q\[(\d+)\]")


def parse_qasm(text: str) -> tuple[int, list[Gate]]:
    """Read back (num_qubits, gates) from text produced by :func:`to_qasm`."""
    num_qubits = None
    gates = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(("//", "OPENQASM", "include", "gate ", "bit[")):
            continue
        if "measure" in line:
            continue
        m = _QUBITS_RE.match(line)
        if m:
            num_qubits = int(m.group(1))
            continue
        m = _STMT_RE.match(line)
        if not m:
            raise ValidationError(f"unsupported QASM statement: {line!r}")
        has_ctrl, nctrl, name, arg, operand_text = m.groups()
        qubits = [int(x) for x in _OPERAND_RE.findall(operand_text)]
        nc = (int(nctrl) if nctrl else 1) if has_ctrl else 0
        if name == "cx":
            nc = 1
        controls, target = tuple(qubits[:nc]), qubits[nc]
        if name in ("x", "cx"):
            gates.append(Gate("x", target, controls))
        elif name == "h":
            gates.append(Gate("h", target))
        elif name == "p0":
            gates.append(Gate("diag", target, controls, (float(arg), 0.0)))
        elif name.startswith("split_"):
            gates.append(Gate("split", target, controls, (int(name[len("split_"):]),)))
        else:
            raise ValidationError(f"unsupported gate {name!r}")
    if num_qubits is None:
        raise ValidationError("no qubit register declared")
    return num_qubits, gates
