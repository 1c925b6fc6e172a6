import numpy as np
import pytest

# (name, target, db, is_binary, symbol_length, shots, expected distances)
WORKED_EXAMPLES = [
    ("coverage", "10110", ["10110", "11010", "01110", "01001"], True, 1, 8192, [0, 2, 2, 5]),
    (
        "trace",
        ["foo", "quux", "foo"],
        [["foo", "quux", "bar"], ["foo", "bar", "foo"], ["bar", "foo", "foo"], ["foo", "bar", "bar"]],
        False, 1, 8192, [1, 1, 2, 2],
    ),
    (
        "dna",
        list("CGAATT"),
        [list("CGAATT"), list("CCAACC"), list("GAAAGA"), list("CGATAT")],
        False, 1, 10000, [0, 3, 4, 2],
    ),
    (
        "mrna",
        ["AUG", "ACG", "CCC"],
        [["AUG", "ACG", "CUU"], ["GAG", "CGC", "CCC"], ["AAA", "ACG", "UUU"], ["AGA", "GAG", "UUU"]],
        False, 1, 8192, [1, 2, 2, 3],
    ),
]


def random_bits(rng, n):
    return "".join(rng.choice(["0", "1"], size=n))


def random_instance(rng, max_n=8, ds=(1, 2, 4), max_r=4):
    """A random (target, distinct patterns, d) triple with n <= max_n and n % d == 0."""
    d = int(rng.choice(ds))
    z = int(rng.integers(1, max_n // d + 1))
    n = z * d
    r = int(rng.integers(1, min(max_r, 2**n) + 1))
    patterns = set()
    while len(patterns) < r:
        patterns.add(random_bits(rng, n))
    return random_bits(rng, n), sorted(patterns), d


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


ACCEPTANCE_LINES = []


@pytest.fixture
def verdict():
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""

    def record(number, title, ok, detail=""):
        ACCEPTANCE_LINES.append((number, f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
                                         + (f"  ({detail})" if detail else "")))
        assert ok, f"criterion {number} failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
