"""Alphabets, symbol <-> bit encoding, input validation and deduplication."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Sequence

from .errors import ValidationError


@dataclass(frozen=True)
class Alphabet:
    """Symbol ``symbols[i]`` is encoded as ``i`` written as a ``d``-bit big-endian string."""

    symbols: tuple
    d: int

    def __post_init__(self):
        if not self.symbols:
            raise ValidationError("alphabet is empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValidationError("alphabet symbols must be distinct")
        if (1 << self.d) < len(self.symbols):
            raise ValidationError(f"{len(self.symbols)} symbols do not fit in {self.d} bits")

    @classmethod
    def from_symbols(cls, symbols: Sequence[Hashable]) -> "Alphabet":
        symbols = tuple(symbols)
        return cls(symbols, bits_per_symbol(len(symbols)))

    def code(self, token) -> str:
        try:
            i = self._index[token]
        except KeyError:
            raise ValidationError(f"unknown symbol {token!r}") from None
        return format(i, f"0{self.d}b")

    @cached_property
    def _index(self) -> dict:
        return {s: i for i, s in enumerate(self.symbols)}


def bits_per_symbol(count: int) -> int:
    """max(1, ceil(log2(count)))."""
    if count < 1:
        raise ValidationError("need at least one symbol")
    return max(1, (count - 1).bit_length())


def build_alphabet(target: Sequence, db: Sequence[Sequence]) -> Alphabet:
    tokens = set(target)
    for row in db:
        tokens.update(row)
    if not tokens:
        raise ValidationError("no symbols in target or database")
    try:
        ordered = sorted(tokens)
    except TypeError:
        # mixed, non-comparable tokens: fall back to a stable textual order
        ordered = sorted(tokens, key=lambda t: (type(t).__name__, repr(t)))
    return Alphabet.from_symbols(ordered)


def encode(string: Sequence, alphabet: Alphabet) -> str:
    return "".join(alphabet.code(tok) for tok in string)


def decode(bits: str, alphabet: Alphabet) -> list:
    d = alphabet.d
    if len(bits) % d:
        raise ValidationError(f"bit string length {len(bits)} is not a multiple of {d}")
    out = []
    for i in range(0, len(bits), d):
        k = int(bits[i:i + d], 2)
        if k >= len(alphabet.symbols):
            raise ValidationError(f"code {bits[i:i + d]} is not assigned in this alphabet")
        out.append(alphabet.symbols[k])
    return out


@dataclass(frozen=True)
class EncodedProblem:
    target_bits: str
    db_bits: tuple[str, ...]
    n: int
    d: int
    z: int
    origin_map: tuple[int, ...]
    multiplicities: tuple[int, ...]
    alphabet: Alphabet | None = None

    @property
    def r(self) -> int:
        """Number of distinct stored patterns."""
        return len(self.db_bits)

    @property
    def num_entries(self) -> int:
        return len(self.origin_map)


def _dedup(rows: Sequence[str]):
    patterns: list[str] = []
    where: dict[str, int] = {}
    origin = []
    for row in rows:
        if row not in where:
            where[row] = len(patterns)
            patterns.append(row)
        origin.append(where[row])
    mult = [0] * len(patterns)
    for k in origin:
        mult[k] += 1
    return tuple(patterns), tuple(origin), tuple(mult)


def validate_and_encode(
    target,
    db,
    binary_mode: bool = True,
    symbol_length: int = 1,
    alphabet: Alphabet | None = None,
) -> EncodedProblem:
    """Check the inputs and turn them into distinct bit patterns.

    In binary mode ``target`` and every ``db`` entry are strings of ``0``/``1``
    characters and ``symbol_length`` is the symbol width. Otherwise they are
    sequences of opaque tokens; the alphabet is built from the data (unless
    given) and its width overrides ``symbol_length``.
    """
    if db is None or len(db) == 0:
        raise ValidationError("database is empty", field="db")
    if symbol_length < 1:
        raise ValidationError(f"symbol_length must be >= 1, got {symbol_length}", field="symbol_length")
    target = target if binary_mode else list(target)
    db = list(db) if binary_mode else [list(row) for row in db]
    if len(target) == 0:
        raise ValidationError("target is empty", field="target")
    for i, row in enumerate(db):
        if len(row) != len(target):
            raise ValidationError(
                f"database entry {i} has length {len(row)}, target has length {len(target)}",
                index=i,
                field="db",
            )

    if binary_mode:
        for i, row in enumerate([target, *db]):
            if not isinstance(row, str):
                raise ValidationError(f"binary input must be a string of 0/1, got {row!r}",
                                      index=None if i == 0 else i - 1,
                                      field="target" if i == 0 else "db")
            bad = set(row) - {"0", "1"}
            if bad:
                raise ValidationError(
                    f"non-binary character(s) {sorted(bad)} in {'target' if i == 0 else f'database entry {i - 1}'}",
                    index=None if i == 0 else i - 1,
                    field="target" if i == 0 else "db",
                )
        if len(target) % symbol_length:
            raise ValidationError(
                f"length {len(target)} is not divisible by symbol_length {symbol_length}",
                field="symbol_length",
            )
        d = symbol_length
        target_bits, rows = target, db
    else:
        alphabet = alphabet or build_alphabet(target, db)
        d = alphabet.d
        target_bits = encode(target, alphabet)
        rows = []
        for i, row in enumerate(db):
            try:
                rows.append(encode(row, alphabet))
            except ValidationError as exc:
                raise ValidationError(f"database entry {i}: {exc}", index=i, field="db") from None

    patterns, origin, mult = _dedup(rows)
    n = len(target_bits)
    return EncodedProblem(
        target_bits=target_bits,
        db_bits=patterns,
        n=n,
        d=d,
        z=n // d,
        origin_map=origin,
        multiplicities=mult,
        alphabet=None if binary_mode else alphabet,
    )
