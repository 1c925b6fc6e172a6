"""Symbol-level Hamming distance on a simulated probabilistic quantum memory."""

from .api import compare_strings, export_qasm
from .encoding import Alphabet, EncodedProblem, build_alphabet, decode, encode, validate_and_encode
from .errors import CapacityError, PostSelectionError, QhamError, ValidationError
from .estimator import ComparisonResult, analytic_distribution, estimate_exact, estimate_sampled
from .oracle import compare_classical, hamming_bits, hamming_symbols
from .pqm import (
    RawRunResult,
    RegisterLayout,
    StoredMemory,
    circuit_trace,
    retrieve_bitlevel,
    retrieve_symbollevel,
    run_comparison,
    store_patterns,
)
from .resources import ResourceReport, estimate_resources, qubits_needed

__all__ = [
    "Alphabet",
    "CapacityError",
    "ComparisonResult",
    "EncodedProblem",
    "PostSelectionError",
    "QhamError",
    "RawRunResult",
    "RegisterLayout",
    "ResourceReport",
    "StoredMemory",
    "ValidationError",
    "analytic_distribution",
    "build_alphabet",
    "circuit_trace",
    "compare_classical",
    "compare_strings",
    "decode",
    "encode",
    "estimate_exact",
    "estimate_resources",
    "estimate_sampled",
    "export_qasm",
    "hamming_bits",
    "hamming_symbols",
    "qubits_needed",
    "retrieve_bitlevel",
    "retrieve_symbollevel",
    "run_comparison",
    "store_patterns",
    "validate_and_encode",
]
