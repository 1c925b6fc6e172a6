"""Qubit budget for the combined storage + retrieval circuit."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, ValidationError


def qubits_needed(n: int, d: int = 1) -> int:
    """n memory qubits, n/d symbol flags and two utility qubits."""
    if d < 1 or n < 1 or n % d:
        raise ValidationError(f"need n >= 1 divisible by d >= 1, got n={n}, d={d}")
    return n + n // d + 2


@dataclass(frozen=True)
class ResourceReport:
    q: int
    d: int

    @property
    def z_max(self) -> int:
        """Longest string, in d-bit symbols, that fits in q qubits."""
        return (self.q - 2) // (self.d + 1)

    @property
    def n_max(self) -> int:
        return self.z_max * self.d

    def qubits_needed(self, n: int) -> int:
        return qubits_needed(n, self.d)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "d": self.d,
            "z_max": self.z_max,
            "n_max": self.n_max,
            "qubits_used": self.qubits_needed(self.n_max),
        }


def estimate_resources(q: int, d: int) -> ResourceReport:
    if d < 1:
        raise ValidationError(f"bits per symbol must be >= 1, got {d}", field="d")
    if q < d + 3:
        raise CapacityError(
            f"{q} qubits cannot hold even one {d}-bit symbol: need at least {d + 3}"
        )
    return ResourceReport(q, d)
