"""CSV tables of minimal-height representations, generator files and plot data."""
from __future__ import annotations

import csv
import io
import math
import re
from collections import defaultdict
from dataclasses import astuple, dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .core import is_squarefree
from .pq_codec import (
    InvariantError,
    NotRepresentedError,
    PQPair,
    Report,
    TriangleSides,
    compress_pq,
    pq_to_sides,
    sides_to_pq,
    validate_pq,
)

__all__ = [
    "HEADER",
    "ParseError",
    "CongruentRecord",
    "Improvement",
    "make_record",
    "record_from_sides",
    "parse_table",
    "emit_table",
    "read_table",
    "write_table",
    "validate_record",
    "diff_tables",
    "emit_plot_data",
    "parse_generators",
]

HEADER = ("n", "P", "Q", "a1", "a2", "b1", "b2", "P0", "P1", "Q0", "Q1", "height")
_INT = re.compile(r"-?[0-9]+")


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class CongruentRecord:
    n: int
    P: int
    Q: int
    alpha1: int
    alpha2: int
    beta1: int
    beta2: int
    P0: int
    P1: int
    Q0: int
    Q1: int
    height: int

    @property
    def sides(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.alpha1, self.alpha2), Fraction(self.beta1, self.beta2)


def make_record(n: int, P: int, Q: int) -> CongruentRecord:
    """Full table row for ``n`` from its (P, Q) parameters."""
    pq = PQPair(P, Q)
    sides = pq_to_sides(n, pq)
    c = compress_pq(pq, n)
    return CongruentRecord(n, P, Q, sides.a1, sides.a2, sides.b1, sides.b2,
                           c.P0, c.P1, c.Q0, c.Q1, sides.height)


def record_from_sides(n: int, alpha, beta) -> CongruentRecord:
    pq = sides_to_pq(TriangleSides.from_legs(n, alpha, beta))
    return make_record(n, pq.P, pq.Q)


def parse_table(text: str) -> list[CongruentRecord]:
    """Parse CSV text with the fixed header into records (no validation)."""
    rows = csv.reader(io.StringIO(text))
    records = []
    header_seen = False
    for lineno, row in enumerate(rows, start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if not header_seen:
            if tuple(cell.strip() for cell in row) != HEADER:
                raise ParseError(lineno, f"expected header {','.join(HEADER)}")
            header_seen = True
            continue
        if len(row) != len(HEADER):
            raise ParseError(lineno, f"expected {len(HEADER)} columns, got {len(row)}")
        values = []
        for name, cell in zip(HEADER, row):
            cell = cell.strip()
            if not _INT.fullmatch(cell):
                raise ParseError(lineno, f"column {name}: {cell!r} is not an integer")
            values.append(int(cell))
        records.append(CongruentRecord(*values))
    return records


def emit_table(records: Iterable[CongruentRecord]) -> str:
    lines = [",".join(HEADER)]
    lines.extend(",".join(str(v) for v in astuple(r)) for r in records)
    return "\n".join(lines) + "\n"


def read_table(path) -> list[CongruentRecord]:
    with open(path, newline="") as fh:
        return parse_table(fh.read())


def write_table(path, records: Iterable[CongruentRecord]) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(emit_table(records))


def validate_record(r: CongruentRecord) -> Report:
    """Run every consistency check on a table row and report the failures.

    The checks are independent of each other, so a single corrupted column
    usually shows up as several named failures.
    """
    rep = Report()
    if not rep.check("positive_entries", min(astuple(r)) >= 1):
        return rep
    rep.check("n_squarefree", is_squarefree(r.n))
    rep.check("reduced_alpha", math.gcd(r.alpha1, r.alpha2) == 1)
    rep.check("reduced_beta", math.gcd(r.beta1, r.beta2) == 1)
    # Area: a1 b1 = 2 n a2 b2.
    rep.check("area", r.alpha1 * r.beta1 == 2 * r.n * r.alpha2 * r.beta2)
    A, B = r.alpha1 * r.beta2, r.alpha2 * r.beta1
    C = math.isqrt(A * A + B * B)
    rep.check("pythagorean", C * C == A * A + B * B)
    rep.check("numerators_coprime", math.gcd(r.alpha1, r.beta1) == 1)
    rep.check("denominators_coprime", math.gcd(r.alpha2, r.beta2) == 1)
    rep.check("numerators_opposite_parity", (r.alpha1 + r.beta1) % 2 == 1)
    rep.check("height", r.height == max(r.alpha1, r.beta1)
              == max(r.alpha1, r.alpha2, r.beta1, r.beta2))
    rep.check("P_decomposition", r.P0 * r.P1 ** 2 == r.P)
    rep.check("Q_decomposition", r.Q0 * r.Q1 ** 2 == r.Q)
    rep.check("P0_squarefree", is_squarefree(r.P0))
    rep.check("Q0_squarefree", is_squarefree(r.Q0))
    rep.check("P0Q0_divides_n", r.n % (r.P0 * r.Q0) == 0)
    pq_report = validate_pq(r.P, r.Q)
    rep.failures.extend(f"pq_{name}" for name in pq_report.failures)
    try:
        sides = pq_to_sides(r.n, PQPair(r.P, r.Q))
        same = {sides.alpha, sides.beta} == set(r.sides)
    except (InvariantError, NotRepresentedError):
        same = False
    rep.check("pq_reproduces_sides", same)
    return rep


class Improvement(NamedTuple):
    n: int
    old_height: int
    new_height: int

    @property
    def improved(self) -> bool:
        return self.new_height < self.old_height


def diff_tables(old: Iterable[CongruentRecord], new: Iterable[CongruentRecord]) -> list[Improvement]:
    """Rows present in both tables whose heights differ, ordered by ``n``."""
    old_by_n = {r.n: r for r in old}
    out = []
    for r in new:
        prev = old_by_n.get(r.n)
        if prev is not None and prev.height != r.height:
            out.append(Improvement(r.n, prev.height, r.height))
    return sorted(out)


def emit_plot_data(records: Iterable[CongruentRecord]) -> str:
    """``n<TAB>log10(height)`` lines, six decimals."""
    return "".join(f"{r.n}\t{math.log10(r.height):.6f}\n" for r in records)


def parse_generators(text: str) -> dict[int, list[tuple[Fraction, Fraction]]]:
    """Read ``N x y`` lines (``x``, ``y`` as ``num/den`` or integers), grouped by N.

    Blank lines and lines starting with ``#`` are ignored.
    """
    out: dict[int, list[tuple[Fraction, Fraction]]] = defaultdict(list)
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(lineno, f"expected 'N x y', got {line!r}")
        try:
            N = int(parts[0])
            x, y = _parse_fraction(parts[1]), _parse_fraction(parts[2])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(lineno, str(exc)) from None
        out[N].append((x, y))
    return dict(out)


def _parse_fraction(token: str) -> Fraction:
    num, _, den = token.partition("/")
    if not _INT.fullmatch(num) or (den and not _INT.fullmatch(den)):
        raise ValueError(f"{token!r} is not a rational number")
    return Fraction(int(num), int(den) if den else 1)
