"""Exact counts of strict chains of supports over m cells.

A chain of length k is a strictly increasing sequence of k+1 subsets of an
m-cell grid; for order-n matrices m = n*n.  Two independent evaluations are
provided and must always agree:

* the nested summation over size vectors (the strictly increasing sequences
  of component cardinalities), evaluated by depth-first search with shared
  prefix products, and
* an inclusion-exclusion closed form with O(k) big-integer terms, obtained by
  viewing a chain as a cell -> entry-step assignment and subtracting the
  assignments that collapse a step.

All arithmetic is exact arbitrary-precision integer arithmetic.
"""

from __future__ import annotations

import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Iterator, Literal, Sequence

__all__ = [
    "CountRow",
    "CountTable",
    "SizeVector",
    "binomial",
    "chain_count",
    "chain_count_ie",
    "chain_count_rooted",
    "chain_counts_by_k",
    "count_table",
    "flag_count",
    "instrumented_chain_counts",
    "sequence",
    "size_vectors",
    "term_count",
    "total_count",
    "total_count_rooted",
]

Root = Literal["O", "J"]

# Pascal rows, grown monotonically and shared process-wide.  Readers index
# finished rows only; growth happens under the lock, so concurrent callers
# behave as if the table were computed once.
_pascal_rows: list[list[int]] = [[1]]
_pascal_lock = threading.Lock()


def _pascal(m: int) -> list[list[int]]:
    if len(_pascal_rows) <= m:
        with _pascal_lock:
            while len(_pascal_rows) <= m:
                prev = _pascal_rows[-1]
                row = [1]
                row.extend(prev[i] + prev[i + 1] for i in range(len(prev) - 1))
                row.append(1)
                _pascal_rows.append(row)
    return _pascal_rows


def binomial(a: int, b: int) -> int:
    """Binomial coefficient C(a, b), with C(a, b) = 0 for b < 0 or b > a."""
    if a < 0:
        raise ValueError(f"binomial requires a >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return _pascal(a)[a][b]


def _check_root(root: str) -> str:
    if root not in ("O", "J"):
        raise ValueError(f'root must be "O" or "J", got {root!r}')
    return root


def _check_cells(m: int) -> int:
    if m < 0:
        raise ValueError(f"cell count must be nonnegative, got {m}")
    return m


def _check_order(n: int) -> int:
    if n < 0:
        raise ValueError(f"order must be nonnegative, got {n}")
    return n


@dataclass(frozen=True)
class SizeVector:
    """Strictly increasing component cardinalities 0 <= s_0 < ... < s_k <= m.

    Every chain determines one size vector; the number of chains sharing a
    size vector is a product of binomials, computable from either end.
    """

    cell_count: int
    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(self.sizes))
        _check_cells(self.cell_count)
        if not self.sizes:
            raise ValueError("a size vector is nonempty")
        for s in self.sizes:
            if not (0 <= s <= self.cell_count):
                raise ValueError(f"size {s} outside [0, {self.cell_count}]")
        for prev, nxt in zip(self.sizes, self.sizes[1:]):
            if not prev < nxt:
                raise ValueError("sizes must be strictly increasing")

    @property
    def k(self) -> int:
        return len(self.sizes) - 1

    def count_chains(self) -> int:
        """Chains with these sizes, built bottom-up: pick s_0 cells, then each increment."""
        m = self.cell_count
        total = binomial(m, self.sizes[0])
        for prev, nxt in zip(self.sizes, self.sizes[1:]):
            total *= binomial(m - prev, nxt - prev)
        return total

    def count_chains_top_down(self) -> int:
        """Chains with these sizes, built top-down: pick s_k cells, then each subset."""
        total = binomial(self.cell_count, self.sizes[-1])
        for prev, nxt in zip(self.sizes, self.sizes[1:]):
            total *= binomial(nxt, prev)
        return total


def size_vectors(m: int, k: int) -> Iterator[SizeVector]:
    """All size vectors of length k+1 over m cells, in lexicographic order."""
    _check_cells(m)
    if k < 0 or k > m:
        return
    for sizes in combinations(range(m + 1), k + 1):
        yield SizeVector(m, sizes)


def _sum_over_sizes(m: int, k: int, s0_values: Sequence[int], to_full: bool) -> int:
    """Nested summation over size vectors with the given first components.

    to_full restricts to vectors ending at m (full support).  Prefix products
    are shared along the recursion, so each size vector costs one multiply.
    """
    rows = _pascal(m)

    def descend(remaining: int, steps: int, prod: int) -> int:
        if steps == 0:
            if to_full and remaining != 0:
                return 0
            return prod
        row = rows[remaining]
        total = 0
        # Each later step must add at least one cell, so leave steps-1 behind.
        for d in range(1, remaining - steps + 2):
            total += descend(remaining - d, steps - 1, prod * row[d])
        return total

    row_m = rows[m]
    result = 0
    for s0 in s0_values:
        result += descend(m - s0, k, row_m[s0])
    return result


def _sum_chunk(args: tuple[int, int, tuple[int, ...], bool]) -> int:
    m, k, s0_values, to_full = args
    return _sum_over_sizes(m, k, s0_values, to_full)


def _split(values: Sequence[int], parts: int) -> list[tuple[int, ...]]:
    chunks = [tuple(values[i::parts]) for i in range(parts)]
    return [c for c in chunks if c]


def _parallel_sum(m: int, k: int, s0_values: Sequence[int], to_full: bool, processes: int) -> int:
    chunks = _split(s0_values, processes)
    if len(chunks) <= 1:
        return _sum_over_sizes(m, k, s0_values, to_full)
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        return sum(pool.map(_sum_chunk, [(m, k, c, to_full) for c in chunks]))


def chain_count(m: int, k: int, *, processes: int | None = None) -> int:
    """Number of strict chains of k+1 supports over m cells (nested summation)."""
    _check_cells(m)
    if k < 0 or k > m:
        return 0
    s0_values = range(0, m - k + 1)
    if processes and processes > 1:
        return _parallel_sum(m, k, tuple(s0_values), False, processes)
    return _sum_over_sizes(m, k, s0_values, False)


def chain_count_rooted(m: int, k: int, root: Root) -> int:
    """Chains whose initial term is empty (root "O") or terminal term full ("J")."""
    _check_cells(m)
    _check_root(root)
    if k < 0 or k > m:
        return 0
    if root == "O":
        return _sum_over_sizes(m, k, (0,), False)
    return _sum_over_sizes(m, k, range(0, m - k + 1), True)


def chain_counts_by_k(m: int, *, processes: int | None = None) -> list[int]:
    """All per-k chain counts over m cells in one summation pass."""
    _check_cells(m)
    if processes and processes > 1:
        chunks = _split(range(m + 1), processes)
        if len(chunks) > 1:
            with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
                results = pool.map(_by_k_chunk, [(m, c) for c in chunks])
                totals = [0] * (m + 1)
                for partial in results:
                    for i, v in enumerate(partial):
                        totals[i] += v
                return totals
    return _by_k_chunk((m, tuple(range(m + 1))))


def _by_k_chunk(args: tuple[int, tuple[int, ...]]) -> list[int]:
    m, s0_values = args
    totals = [0] * (m + 1)
    rows = _pascal(m)

    def descend(remaining: int, depth: int, prod: int) -> None:
        row = rows[remaining]
        nxt = depth + 1
        for d in range(1, remaining + 1):
            p = prod * row[d]
            totals[depth] += p
            if d < remaining:
                descend(remaining - d, nxt, p)

    row_m = rows[m]
    for s0 in s0_values:
        totals[0] += row_m[s0]
        if s0 < m:
            descend(m - s0, 1, row_m[s0])
    return totals


def instrumented_chain_counts(m: int) -> tuple[list[int], int]:
    """Per-k counts plus the number of size vectors the summation visited.

    One vector is visited per nonempty subset of {0, ..., m}, so the second
    component always equals 2^(m+1) - 1; keeping the counter in the actual
    evaluation makes that an observable fact rather than an assumption.
    """
    _check_cells(m)
    totals = [0] * (m + 1)
    visited = 0
    rows = _pascal(m)

    def descend(remaining: int, depth: int, prod: int) -> None:
        nonlocal visited
        row = rows[remaining]
        for d in range(1, remaining + 1):
            p = prod * row[d]
            totals[depth] += p
            visited += 1
            if d < remaining:
                descend(remaining - d, depth + 1, p)

    row_m = rows[m]
    for s0 in range(m + 1):
        totals[0] += row_m[s0]
        visited += 1
        if s0 < m:
            descend(m - s0, 1, row_m[s0])
    return totals, visited


def chain_count_ie(m: int, k: int) -> int:
    """Inclusion-exclusion evaluation of chain_count(m, k) in O(k) terms.

    Weak chains of length k correspond to maps from the m cells into k+2
    slots (the entry step, or "never"); alternating over which of the k
    steps are collapsed leaves exactly the strict chains.
    """
    _check_cells(m)
    if k < 0 or k > m:
        return 0
    total = 0
    for i in range(k + 1):
        term = binomial(k, i) * (k + 2 - i) ** m
        total += -term if i % 2 else term
    return total


def _pick_method(method: str, m: int) -> str:
    if method == "auto":
        return "naive" if m <= 16 else "ie"
    if method in ("naive", "ie"):
        return method
    raise ValueError(f'method must be "auto", "naive", or "ie", got {method!r}')


def total_count(n: int, *, method: str = "auto", processes: int | None = None) -> int:
    """Number of equivalence classes of order-n fuzzy matrices: all chains over n*n cells.

    Both methods are exact and always agree; "auto" evaluates the nested
    summation up to 16 cells and the closed form beyond.
    """
    _check_order(n)
    m = n * n
    if _pick_method(method, m) == "naive":
        return sum(chain_counts_by_k(m, processes=processes))
    return sum(chain_count_ie(m, k) for k in range(m + 1))


def total_count_rooted(n: int, root: Root) -> int:
    """Classes whose chains contain the empty (root "O") or full ("J") support."""
    _check_order(n)
    _check_root(root)
    m = n * n
    return sum(chain_count_rooted(m, k, root) for k in range(m + 1))


def flag_count(n: int) -> int:
    """Number of maximal chains over n*n cells: one cell enters per step, so (n*n)!."""
    _check_order(n)
    return factorial(n * n)


def term_count(n: int) -> int:
    """Number of size vectors the order-n summation ranges over: 2^(n*n+1) - 1."""
    _check_order(n)
    return 2 ** (n * n + 1) - 1


@dataclass(frozen=True)
class CountRow:
    n: int
    counts: tuple[int, ...]
    total: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(self.counts))
        if len(self.counts) != self.n * self.n + 1:
            raise ValueError(f"row for order {self.n} needs {self.n * self.n + 1} counts")
        if self.total != sum(self.counts):
            raise ValueError(f"row total {self.total} != sum of counts {sum(self.counts)}")


@dataclass(frozen=True)
class CountTable:
    """Per-k counts and totals for orders 0..max_n, optionally root-restricted."""

    rows: tuple[CountRow, ...]
    root: str | None = None

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def to_csv(self) -> str:
        lines = ["n,k,f_nk,f_n"]
        for row in self.rows:
            for k, value in enumerate(row.counts):
                lines.append(f"{row.n},{k},{value},{row.total}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "root": self.root,
            "max_n": self.max_n,
            "rows": [
                {"n": row.n, "counts": list(row.counts), "total": row.total}
                for row in self.rows
            ],
        }


def count_table(max_n: int, *, root: Root | None = None, method: str = "auto") -> CountTable:
    """Full table of per-k counts and totals for n = 0..max_n.

    Rooted tables always use the restricted summation (no closed form exists
    for them); method selects the path for the unrooted rows.
    """
    _check_order(max_n)
    if root is not None:
        _check_root(root)
    rows = []
    for n in range(max_n + 1):
        m = n * n
        if root is not None:
            counts = [chain_count_rooted(m, k, root) for k in range(m + 1)]
        elif _pick_method(method, m) == "naive":
            counts = chain_counts_by_k(m)
        else:
            counts = [chain_count_ie(m, k) for k in range(m + 1)]
        rows.append(CountRow(n, tuple(counts), sum(counts)))
    return CountTable(tuple(rows), root)


def sequence(max_n: int, *, method: str = "auto") -> list[tuple[int, int]]:
    """The class-count sequence (n, f_n) for n = 0..max_n."""
    _check_order(max_n)
    return [(n, total_count(n, method=method)) for n in range(max_n + 1)]
