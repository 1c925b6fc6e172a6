import numpy as np
import pytest

from qham import export_qasm
from qham.errors import ValidationError
from qham.pqm import Gate, circuit_trace, replay, retrieve_symbollevel, split_matrix, store_patterns
from qham.qasm import parse_qasm, split_angle, to_qasm

COVERAGE_DB = ["10110", "11010", "01110", "01001"]


def test_split_angle_is_split_matrix():
    for j in range(1, 9):
        t = split_angle(j)
        ry = np.array([[np.cos(t / 2), -np.sin(t / 2)], [np.sin(t / 2), np.cos(t / 2)]])
        np.testing.assert_allclose(ry, split_matrix(j).as_array(), atol=1e-15)


def test_minimal_roundtrip():
    mem = store_patterns(["1"])
    gates = circuit_trace(mem, "0", 1)
    text = to_qasm(gates, mem.layout)
    num_qubits, parsed = parse_qasm(text)
    assert num_qubits == mem.layout.num_qubits
    assert len(parsed) == len(gates)
    assert [(g.kind, g.target, g.controls) for g in parsed] == [(g.kind, g.target, g.controls) for g in gates]
    state = replay(parsed, num_qubits)
    np.testing.assert_allclose(state.amplitudes, retrieve_symbollevel(mem, "0").amplitudes, atol=1e-9)


@pytest.mark.parametrize("target,db,binary", [
    ("10110", COVERAGE_DB, True),
    (["foo", "quux", "foo"], [["foo", "quux", "bar"], ["foo", "bar", "foo"]], False),
])
def test_roundtrip_replay(target, db, binary):
    text = export_qasm(target, db, is_binary=binary)
    num_qubits, gates = parse_qasm(text)
    from qham.api import prepare

    problem, mem = prepare(target, db, binary)
    expected = retrieve_symbollevel(mem, problem.target_bits)
    np.testing.assert_allclose(replay(gates, num_qubits).amplitudes, expected.amplitudes, atol=1e-9)


def test_coverage_register_size():
    text = export_qasm("10110", COVERAGE_DB)
    assert "qubit[12] q;" in text
    assert text.startswith("OPENQASM 3.0;")


def test_byte_identical():
    a = export_qasm(list("CGAATT"), [list("CCAACC"), list("GAAAGA")], is_binary=False)
    b = export_qasm(list("CGAATT"), [list("CCAACC"), list("GAAAGA")], is_binary=False)
    assert a == b


def test_statement_forms():
    text = export_qasm("0101", ["0011", "1100"], symbol_length=2)
    assert "ctrl(4) @ x q[0], q[1], q[2], q[3], q[6];" in text  # storage match flag onto u1
    assert "ctrl @ split_2 q[6], q[7];" in text
    assert "ctrl @ p0(" in text
    assert "gate split_2 a { ry(" in text


def test_unexportable_diag():
    mem = store_patterns(["0"])
    with pytest.raises(ValidationError):
        to_qasm([Gate("diag", 0, (), (0.1, 0.2))], mem.layout)


def test_parse_rejects_unknown():
    with pytest.raises(ValidationError):
        parse_qasm("qubit[2] q;\nrz(0.1) q[0];\n")
