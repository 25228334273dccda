"""Exhaustive generation of supports and strict chains: the ground-truth path.

Supports over m cells are bitmasks; bit (m-1-p) holds cell p+1 so that numeric
order on masks coincides with lexicographic order on the row-major bitstrings.
Chains are emitted by recursing on the next strictly larger support, pruning
branches that cannot reach the requested length.  Jobs are pre-sized with the
closed-form count and refused above a configurable ceiling.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .counting import chain_count_ie

__all__ = [
    "CEILING_ENV_VAR",
    "ChainRecord",
    "DEFAULT_CHAIN_CEILING",
    "DEFAULT_SUPPORT_CAP",
    "HasseDiagram",
    "InfeasibleJobError",
    "bits_to_mask",
    "chain_lines",
    "count_chains",
    "enumerate_chains",
    "enumerate_supports",
    "group_by_size_vector",
    "hasse_export",
    "mask_to_bits",
    "support_label",
]

DEFAULT_SUPPORT_CAP = 16
DEFAULT_CHAIN_CEILING = 10**7
CEILING_ENV_VAR = "CUTCHAINS_CHAIN_CEILING"


class InfeasibleJobError(Exception):
    """Raised when a job's projected size exceeds the configured ceiling."""


def _resolve_ceiling(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(CEILING_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{CEILING_ENV_VAR} must be an integer, got {env!r}") from exc
    return DEFAULT_CHAIN_CEILING


def mask_to_bits(mask: int, m: int) -> str:
    """Row-major bitstring of a support mask."""
    return format(mask, f"0{m}b") if m else ""


def bits_to_mask(bits: str) -> int:
    return int(bits, 2) if bits else 0


def support_label(mask: int, m: int) -> str:
    """Label "A_<size>^{cells}" with 1-based cells; no superscript for empty or full."""
    size = mask.bit_count()
    if size == 0:
        return "A_0"
    if size == m:
        return f"A_{m}"
    cells = [str(p + 1) for p in range(m) if mask >> (m - 1 - p) & 1]
    return f"A_{size}^{{{','.join(cells)}}}"


def enumerate_supports(m: int, *, cap: int = DEFAULT_SUPPORT_CAP) -> Iterator[int]:
    """All 2^m support masks in lexicographic bitstring order."""
    if m < 0:
        raise ValueError(f"cell count must be nonnegative, got {m}")
    if m > cap:
        raise InfeasibleJobError(f"{m} cells means 2^{m} supports; the cap is {cap}")
    return iter(range(1 << m))


@dataclass(frozen=True)
class ChainRecord:
    """One strict chain: its cell count and component masks, smallest first."""

    cell_count: int
    components: tuple[int, ...]

    @property
    def size_vector(self) -> tuple[int, ...]:
        return tuple(c.bit_count() for c in self.components)

    def bitstrings(self) -> tuple[str, ...]:
        return tuple(mask_to_bits(c, self.cell_count) for c in self.components)

    def to_line(self, *, labeled: bool = False) -> str:
        if labeled:
            parts = (support_label(c, self.cell_count) for c in self.components)
        else:
            parts = self.bitstrings()
        return " < ".join(parts)


def _check_job(m: int, k: int, root: str | None, ceiling: int | None) -> int:
    if m < 0:
        raise ValueError(f"cell count must be nonnegative, got {m}")
    if root not in (None, "O", "J"):
        raise ValueError(f'root must be "O" or "J", got {root!r}')
    projected = chain_count_ie(m, k)
    limit = _resolve_ceiling(ceiling)
    if projected > limit:
        raise InfeasibleJobError(
            f"projected {projected} chains for m={m}, k={k} exceeds the ceiling {limit}"
        )
    return projected


def _first_components(m: int, k: int, root: str | None) -> Iterator[int]:
    full = (1 << m) - 1
    if root == "O":
        yield 0
    elif root == "J" and k == 0:
        yield full
    else:
        yield from range(full + 1)


def _chain_tuples(
    m: int, k: int, root: str | None, firsts: Iterator[int]
) -> Iterator[tuple[int, ...]]:
    full = (1 << m) - 1

    def extend(last: int, steps: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if steps == 0:
            yield prefix
            return
        if root == "J" and steps == 1:
            if last != full:
                yield prefix + (full,)
            return
        comp = full & ~last
        x = 0
        while True:
            x = (x - comp) & comp
            if x == 0:
                break
            nxt = last | x
            # prune: must leave room for the remaining strict steps
            if m - nxt.bit_count() >= steps - 1:
                yield from extend(nxt, steps - 1, prefix + (nxt,))

    for first in firsts:
        if m - first.bit_count() >= k:
            yield from extend(first, k, (first,))


def enumerate_chains(
    m: int,
    k: int,
    root: str | None = None,
    *,
    ceiling: int | None = None,
) -> Iterator[ChainRecord]:
    """Every strict chain of k+1 supports exactly once, in lexicographic order."""
    _check_job(m, k, root, ceiling)
    if k < 0 or k > m:
        return iter(())
    firsts = _first_components(m, k, root)
    return (ChainRecord(m, t) for t in _chain_tuples(m, k, root, firsts))


def _count_range(args: tuple[int, int, str | None, int, int]) -> int:
    m, k, root, lo, hi = args
    firsts = (f for f in _first_components(m, k, root) if lo <= f < hi)
    return sum(1 for _ in _chain_tuples(m, k, root, firsts))


def _group_range(args: tuple[int, int, str | None, int, int]) -> Counter:
    m, k, root, lo, hi = args
    firsts = (f for f in _first_components(m, k, root) if lo <= f < hi)
    return Counter(
        tuple(c.bit_count() for c in t) for t in _chain_tuples(m, k, root, firsts)
    )


def _line_range(args: tuple[int, int, str | None, int, int, bool]) -> list[str]:
    m, k, root, lo, hi, labeled = args
    firsts = (f for f in _first_components(m, k, root) if lo <= f < hi)
    return [
        ChainRecord(m, t).to_line(labeled=labeled)
        for t in _chain_tuples(m, k, root, firsts)
    ]


def _mask_ranges(m: int, parts: int) -> list[tuple[int, int]]:
    total = 1 << m
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def count_chains(
    m: int,
    k: int,
    root: str | None = None,
    *,
    ceiling: int | None = None,
    processes: int | None = None,
) -> int:
    """Count chains by actually enumerating them (no closed form involved)."""
    _check_job(m, k, root, ceiling)
    if k < 0 or k > m:
        return 0
    if processes and processes > 1:
        ranges = _mask_ranges(m, processes)
        if len(ranges) > 1:
            with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
                return sum(pool.map(_count_range, [(m, k, root, lo, hi) for lo, hi in ranges]))
    return _count_range((m, k, root, 0, 1 << m))


def group_by_size_vector(
    m: int,
    k: int,
    *,
    ceiling: int | None = None,
    processes: int | None = None,
) -> dict[tuple[int, ...], int]:
    """Chain counts partitioned by size vector."""
    _check_job(m, k, None, ceiling)
    if k < 0 or k > m:
        return {}
    if processes and processes > 1:
        ranges = _mask_ranges(m, processes)
        if len(ranges) > 1:
            merged: Counter = Counter()
            with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
                for part in pool.map(_group_range, [(m, k, None, lo, hi) for lo, hi in ranges]):
                    merged.update(part)
            return dict(sorted(merged.items()))
    grouped = _group_range((m, k, None, 0, 1 << m))
    return dict(sorted(grouped.items()))


def chain_lines(
    m: int,
    k: int,
    root: str | None = None,
    *,
    labeled: bool = False,
    ceiling: int | None = None,
    processes: int | None = None,
) -> Iterator[str]:
    """Chain listing lines, identical bytes whether serial or partitioned."""
    _check_job(m, k, root, ceiling)
    if k < 0 or k > m:
        return iter(())
    if processes and processes > 1:
        ranges = _mask_ranges(m, processes)
        if len(ranges) > 1:
            return _parallel_lines(m, k, root, labeled, ranges, processes)
    firsts = _first_components(m, k, root)
    return (
        ChainRecord(m, t).to_line(labeled=labeled) for t in _chain_tuples(m, k, root, firsts)
    )


def _parallel_lines(m, k, root, labeled, ranges, processes) -> Iterator[str]:
    with ProcessPoolExecutor(max_workers=min(processes, len(ranges))) as pool:
        for lines in pool.map(_line_range, [(m, k, root, lo, hi, labeled) for lo, hi in ranges]):
            yield from lines


@dataclass(frozen=True)
class HasseDiagram:
    """Covering relation of the support lattice: edges add exactly one cell."""

    cell_count: int
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def to_dot(self) -> str:
        m = self.cell_count
        lines = ["digraph support_lattice {", "  rankdir=BT;"]
        for node in self.nodes:
            lines.append(f'  "{mask_to_bits(node, m)}" [label="{support_label(node, m)}"];')
        for a, b in self.edges:
            lines.append(f'  "{mask_to_bits(a, m)}" -> "{mask_to_bits(b, m)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        m = self.cell_count
        adjacency: dict[str, list[str]] = {mask_to_bits(n, m): [] for n in self.nodes}
        for a, b in self.edges:
            adjacency[mask_to_bits(a, m)].append(mask_to_bits(b, m))
        return {
            "m": m,
            "nodes": [
                {"bits": mask_to_bits(n, m), "label": support_label(n, m)} for n in self.nodes
            ],
            "adjacency": adjacency,
        }


def hasse_export(m: int, *, cap: int = DEFAULT_SUPPORT_CAP) -> HasseDiagram:
    """Covering-relation graph over all supports of m cells."""
    nodes = tuple(enumerate_supports(m, cap=cap))
    edges = []
    for node in nodes:
        # iterate absent cells in cell order (bit m-1 is cell 1)
        for p in range(m):
            bit = 1 << (m - 1 - p)
            if not node & bit:
                edges.append((node, node | bit))
    return HasseDiagram(m, nodes, tuple(edges))
