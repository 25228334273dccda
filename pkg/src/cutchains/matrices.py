"""Crisp and fuzzy square matrices with exact rational entries.

A crisp matrix is identified with its support, the set of cells holding a 1.
A fuzzy matrix holds membership degrees in [0, 1]; entries are Fractions so
that comparisons against 0 and 1, which the equivalence relation hinges on,
are exact.  Floats are rejected outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator

__all__ = [
    "CrispMatrix",
    "FuzzyMatrix",
    "contains",
    "fuzzy_complement",
    "fuzzy_contains",
    "fuzzy_intersection",
    "fuzzy_union",
    "format_value",
    "parse_value",
]

Cell = tuple[int, int]

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_value(text: str) -> Fraction:
    """Parse a membership value from a decimal ("0.25") or fraction ("1/4") string."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational value: {text!r}") from exc


def format_value(value: Fraction) -> str:
    """Format a rational so that parse_value(format_value(x)) == x.

    Values with a 2^a * 5^b denominator print as exact decimals ("0.25");
    everything else prints as "p/q" in lowest terms.
    """
    if value.denominator == 1:
        return str(value.numerator)
    rest = value.denominator
    twos = fives = 0
    while rest % 2 == 0:
        rest //= 2
        twos += 1
    while rest % 5 == 0:
        rest //= 5
        fives += 1
    if rest != 1:
        return f"{value.numerator}/{value.denominator}"
    digits = max(twos, fives)
    scaled = value.numerator * 10**digits // value.denominator
    text = str(scaled).rjust(digits + 1, "0")
    return f"{text[:-digits]}.{text[-digits:]}"


def _coerce_entry(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(
            f"float entries are not allowed (got {value!r}); use a string or Fraction"
        )
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_value(value)
    raise TypeError(f"cannot use {type(value).__name__} as a membership value")


@dataclass(frozen=True)
class CrispMatrix:
    """An order-n 0/1 matrix, stored as the set of 1-cells (1-based (row, col))."""

    order: int
    support: frozenset[Cell]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        object.__setattr__(self, "support", frozenset(self.support))
        for i, j in self.support:
            if not (1 <= i <= self.order and 1 <= j <= self.order):
                raise ValueError(
                    f"cell ({i}, {j}) outside the {self.order}x{self.order} range"
                )

    @classmethod
    def zeros(cls, order: int) -> "CrispMatrix":
        return cls(order, frozenset())

    @classmethod
    def ones(cls, order: int) -> "CrispMatrix":
        cells = frozenset((i, j) for i in range(1, order + 1) for j in range(1, order + 1))
        return cls(order, cells)

    @classmethod
    def from_bits(cls, bits: str) -> "CrispMatrix":
        """Build from a row-major bitstring, e.g. "1001" for order 2."""
        order = isqrt(len(bits))
        if order * order != len(bits):
            raise ValueError(f"bitstring length {len(bits)} is not a square")
        cells = set()
        for pos, ch in enumerate(bits):
            if ch == "1":
                cells.add((pos // order + 1, pos % order + 1))
            elif ch != "0":
                raise ValueError(f"bitstring may contain only 0 and 1, got {ch!r}")
        return cls(order, frozenset(cells))

    @property
    def bits(self) -> str:
        """Row-major bitstring serialization."""
        n = self.order
        return "".join(
            "1" if (i, j) in self.support else "0"
            for i in range(1, n + 1)
            for j in range(1, n + 1)
        )

    def issubset(self, other: "CrispMatrix") -> bool:
        _same_order(self, other)
        return self.support <= other.support

    def ispropersubset(self, other: "CrispMatrix") -> bool:
        _same_order(self, other)
        return self.support < other.support

    def __len__(self) -> int:
        return len(self.support)

    def __repr__(self) -> str:
        return f"CrispMatrix({self.order}, {self.bits!r})"


def contains(a: CrispMatrix, b: CrispMatrix, *, strict: bool = False) -> bool:
    """Whether a is a subset (or, with strict=True, a proper subset) of b."""
    return a.ispropersubset(b) if strict else a.issubset(b)


@dataclass(frozen=True)
class FuzzyMatrix:
    """An order-n matrix of exact rational membership degrees in [0, 1]."""

    order: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        rows = tuple(tuple(_coerce_entry(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if len(rows) != self.order or any(len(row) != self.order for row in rows):
            raise ValueError(f"entries do not form an {self.order}x{self.order} grid")
        for row in rows:
            for v in row:
                if not (ZERO <= v <= ONE):
                    raise ValueError(f"membership value {v} outside [0, 1]")

    @classmethod
    def from_rows(cls, rows) -> "FuzzyMatrix":
        """Build from any square nest of strings, ints, or Fractions."""
        rows = tuple(tuple(row) for row in rows)
        return cls(len(rows), rows)

    @classmethod
    def parse_text(cls, text: str) -> "FuzzyMatrix":
        """Parse the plain-text form: n lines of n whitespace-separated values."""
        lines = [line for line in text.splitlines() if line.strip()]
        rows = []
        for line in lines:
            rows.append(tuple(parse_value(tok) for tok in line.split()))
        matrix = cls(len(rows), tuple(rows))
        return matrix

    @classmethod
    def from_json_dict(cls, data) -> "FuzzyMatrix":
        if not isinstance(data, dict) or "n" not in data or "entries" not in data:
            raise ValueError('matrix JSON must be {"n": ..., "entries": [[...], ...]}')
        n = data["n"]
        if not isinstance(n, int):
            raise ValueError(f'"n" must be an integer, got {n!r}')
        entries = data["entries"]
        if not isinstance(entries, list) or any(not isinstance(r, list) for r in entries):
            raise ValueError('"entries" must be a list of lists of value strings')
        return cls(n, tuple(tuple(parse_value(str(v)) for v in row) for row in entries))

    def to_text(self) -> str:
        return "\n".join(" ".join(format_value(v) for v in row) for row in self.entries)

    def to_json_dict(self) -> dict:
        return {
            "n": self.order,
            "entries": [[format_value(v) for v in row] for row in self.entries],
        }

    def entry(self, i: int, j: int) -> Fraction:
        """Entry at 1-based (i, j)."""
        return self.entries[i - 1][j - 1]

    def values(self) -> Iterator[Fraction]:
        """All entries in row-major order."""
        for row in self.entries:
            yield from row

    def __repr__(self) -> str:
        grid = "; ".join(" ".join(format_value(v) for v in row) for row in self.entries)
        return f"FuzzyMatrix({self.order}, [{grid}])"


def _same_order(a, b) -> None:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")


def fuzzy_union(a: FuzzyMatrix, b: FuzzyMatrix) -> FuzzyMatrix:
    """Cellwise maximum."""
    _same_order(a, b)
    rows = tuple(
        tuple(max(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)
    )
    return FuzzyMatrix(a.order, rows)


def fuzzy_intersection(a: FuzzyMatrix, b: FuzzyMatrix) -> FuzzyMatrix:
    """Cellwise minimum."""
    _same_order(a, b)
    rows = tuple(
        tuple(min(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)
    )
    return FuzzyMatrix(a.order, rows)


def fuzzy_complement(a: FuzzyMatrix) -> FuzzyMatrix:
    """Cellwise 1 - x."""
    rows = tuple(tuple(ONE - x for x in row) for row in a.entries)
    return FuzzyMatrix(a.order, rows)


def fuzzy_contains(a: FuzzyMatrix, b: FuzzyMatrix) -> bool:
    """Whether a <= b holds cellwise."""
    _same_order(a, b)
    return all(x <= y for ra, rb in zip(a.entries, b.entries) for x, y in zip(ra, rb))
