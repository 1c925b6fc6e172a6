"""Command-line interface: ``qham compare | resources | export-qasm``."""

from __future__ import annotations

import argparse
import json
import sys

from .api import DEFAULT_SHOTS, compare_strings, export_qasm
from .errors import QhamError, ValidationError
from .resources import estimate_resources

EXIT_ERROR = 2


def _read_lines(path: str) -> list[str]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return [line for line in text.splitlines() if line.strip()]


def _parse_row(line: str, binary: bool):
    return "".join(line.split()) if binary else line.split()


def load_inputs(args) -> tuple:
    if args.db is None:
        raise ValidationError("--db is required", field="db")
    lines = _read_lines(args.db)
    if args.target is None:
        if not lines:
            raise ValidationError("database file is empty and no --target was given", field="db")
        target_line, lines = lines[0], lines[1:]
    else:
        target_line = args.target
    target = _parse_row(target_line, args.binary)
    db = [_parse_row(line, args.binary) for line in lines]
    if not db:
        raise ValidationError("database is empty", field="db")
    return target, db


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _human_compare(result, db) -> str:
    rows = [f"mode={result.mode} n={result.n} d={result.d} z={result.z} r={result.r}"]
    if result.mode == "sampled":
        rows.append(f"shots={result.shots} seed={result.seed} c0_count={result.c0_count}")
    rows.append(f"P(c=0)={result.c0_probability:.6f}")
    for i, D in enumerate(result.distances):
        entry = db[i] if isinstance(db[i], str) else " ".join(map(str, db[i]))
        p = result.p_values[result.origin_map[i]]
        rows.append(f"{i:>4}  D={D:<3} p={p:.6f}  {entry}")
    rows.extend(f"warning: {w}" for w in result.warnings)
    return "\n".join(rows) + "\n"


def cmd_compare(args) -> str:
    target, db = load_inputs(args)
    result = compare_strings(
        target,
        db,
        is_binary=args.binary,
        symbol_length=args.symbol_length,
        shots=args.shots,
        seed=args.seed,
        exact=args.exact,
    )
    if args.format == "json":
        return json.dumps(result.to_dict(), indent=2) + "\n"
    return _human_compare(result, db)


def cmd_resources(args) -> str:
    if args.qubits is None:
        raise ValidationError("--qubits is required", field="qubits")
    report = estimate_resources(args.qubits, args.symbol_length)
    if args.format == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    return (
        f"q={report.q} d={report.d}: up to z={report.z_max} symbols "
        f"(n={report.n_max} bits, {report.qubits_needed(report.n_max)} qubits used)\n"
    )


def cmd_export_qasm(args) -> str:
    target, db = load_inputs(args)
    return export_qasm(target, db, is_binary=args.binary, symbol_length=args.symbol_length)


def _positive(value: str) -> int:
    v = int(value)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _seed(value: str) -> int:
    v = int(value, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError(f"seed must fit in an unsigned 64-bit integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qham",
        description="Hamming distance of a target string against a database, on a simulated quantum memory.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inputs=True):
        if inputs:
            p.add_argument("--target", help="target string (default: first line of --db)")
            p.add_argument("--db", help="database file, one entry per line ('-' for stdin)")
            p.add_argument("--binary", action="store_true",
                           help="entries are 0/1 strings (default: whitespace-separated symbols)")
        p.add_argument("--symbol-length", type=_positive, default=1,
                       help="bits per symbol (binary mode and resources)")
        p.add_argument("--format", choices=("json", "human"), default="human")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("compare", help="estimate distances to every database entry")
    common(p)
    p.add_argument("--shots", type=_positive, default=DEFAULT_SHOTS)
    p.add_argument("--exact", action="store_true", help="use exact probabilities instead of sampling")
    p.add_argument("--seed", type=_seed, help="sampling seed (random when omitted; always reported)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("resources", help="longest string a q-qubit device can compare")
    common(p, inputs=False)
    p.add_argument("--qubits", type=int, help="available qubits q")
    p.set_defaults(func=cmd_resources)

    p = sub.add_parser("export-qasm", help="emit the comparison circuit as OpenQASM 3")
    common(p)
    p.set_defaults(func=cmd_export_qasm)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
        _emit(text, args.out)
    except (QhamError, OSError) as exc:
        error = exc.to_dict() if isinstance(exc, QhamError) else {"type": "io_error", "message": str(exc)}
        if args.format == "json":
            sys.stdout.write(json.dumps({"error": error}, indent=2) + "\n")
        else:
            sys.stderr.write(f"error: {error['message']}\n")
        return EXIT_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
