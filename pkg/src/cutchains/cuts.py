"""Level cuts of fuzzy matrices and the equivalence they induce.

Thresholding a fuzzy matrix at every level in (0, 1] produces a strictly
increasing chain of crisp matrices.  Two fuzzy matrices are equivalent exactly
when they realize the same chain, so the chain (with levels discarded) is a
canonical signature for the equivalence class.  Both decision procedures are
implemented: the direct entrywise definition and the cut-chain comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .matrices import ONE, ZERO, CrispMatrix, FuzzyMatrix, _same_order

__all__ = [
    "ChainSignature",
    "Classification",
    "CutChain",
    "EquivalenceClass",
    "Rootedness",
    "alpha_cut",
    "canonical_representative",
    "classify_corpus",
    "cut_chain",
    "equivalent_cuts",
    "equivalent_direct",
    "k_level",
    "reconstruct",
    "rootedness",
    "signature",
    "strong_alpha_cut",
]


def _as_level(alpha) -> Fraction:
    if isinstance(alpha, float):
        raise TypeError(f"float cut levels are not allowed (got {alpha!r})")
    return Fraction(alpha)


def alpha_cut(f: FuzzyMatrix, alpha) -> CrispMatrix:
    """Crisp matrix of cells with entry >= alpha, for alpha in (0, 1]."""
    level = _as_level(alpha)
    if not (ZERO < level <= ONE):
        raise ValueError(f"weak cut level must lie in (0, 1], got {level}")
    n = f.order
    cells = frozenset(
        (i, j) for i in range(1, n + 1) for j in range(1, n + 1) if f.entry(i, j) >= level
    )
    return CrispMatrix(n, cells)


def strong_alpha_cut(f: FuzzyMatrix, alpha) -> CrispMatrix:
    """Crisp matrix of cells with entry > alpha, for alpha in [0, 1)."""
    level = _as_level(alpha)
    if not (ZERO <= level < ONE):
        raise ValueError(f"strong cut level must lie in [0, 1), got {level}")
    n = f.order
    cells = frozenset(
        (i, j) for i in range(1, n + 1) for j in range(1, n + 1) if f.entry(i, j) > level
    )
    return CrispMatrix(n, cells)


def _distinct_positive_values(f: FuzzyMatrix) -> list[Fraction]:
    """Distinct positive entry values, descending."""
    return sorted({v for v in f.values() if v > ZERO}, reverse=True)


def k_level(f: FuzzyMatrix) -> int:
    """Number of distinct entry values strictly inside (0, 1)."""
    return len({v for v in f.values() if ZERO < v < ONE})


@dataclass(frozen=True)
class CutChain:
    """A strictly increasing chain of crisp cuts with strictly decreasing levels.

    The pair (levels[i], cuts[i]) records that thresholding at levels[i] yields
    cuts[i]; reconstructing from the chain inverts that.  The all-zero cut may
    appear first at level 1, where it contributes nothing to reconstruction.
    """

    order: int
    levels: tuple[Fraction, ...]
    cuts: tuple[CrispMatrix, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "levels", tuple(Fraction(a) for a in self.levels))
        object.__setattr__(self, "cuts", tuple(self.cuts))
        if len(self.levels) != len(self.cuts):
            raise ValueError("levels and cuts must have equal length")
        if not self.cuts:
            raise ValueError("a cut chain has at least one component")
        if len(self.cuts) > self.order * self.order + 1:
            raise ValueError(
                f"chain of {len(self.cuts)} components exceeds order {self.order}"
            )
        for a in self.levels:
            if not (ZERO < a <= ONE):
                raise ValueError(f"level {a} outside (0, 1]")
        for prev, nxt in zip(self.levels, self.levels[1:]):
            if not prev > nxt:
                raise ValueError("levels must be strictly decreasing")
        for cut in self.cuts:
            if cut.order != self.order:
                raise ValueError("every cut must match the chain order")
        for prev, nxt in zip(self.cuts, self.cuts[1:]):
            if not prev.ispropersubset(nxt):
                raise ValueError("cuts must be strictly increasing under inclusion")

    @property
    def k(self) -> int:
        return len(self.cuts) - 1


@dataclass(frozen=True)
class ChainSignature:
    """The distinct cuts a fuzzy matrix realizes over (0, 1], ascending, levels dropped.

    Structural equality of signatures decides equivalence of the matrices.
    """

    order: int
    cuts: tuple[CrispMatrix, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cuts", tuple(self.cuts))
        if not self.cuts:
            raise ValueError("a signature has at least one cut")
        for cut in self.cuts:
            if cut.order != self.order:
                raise ValueError("every cut must match the signature order")
        for prev, nxt in zip(self.cuts, self.cuts[1:]):
            if not prev.ispropersubset(nxt):
                raise ValueError("cuts must be strictly increasing under inclusion")

    @property
    def k(self) -> int:
        return len(self.cuts) - 1

    @property
    def o_rooted(self) -> bool:
        return len(self.cuts[0]) == 0

    @property
    def j_rooted(self) -> bool:
        return len(self.cuts[-1]) == self.order * self.order

    def to_json_dict(self) -> dict:
        return {
            "n": self.order,
            "k": self.k,
            "cuts": [cut.bits for cut in self.cuts],
            "o_rooted": self.o_rooted,
            "j_rooted": self.j_rooted,
        }


class Rootedness(NamedTuple):
    o_rooted: bool
    j_rooted: bool


def cut_chain(f: FuzzyMatrix) -> CutChain:
    """Decompose f into its chain of cuts, keyed by the realized levels.

    The cuts at the distinct positive entry values, ascending under inclusion.
    When no entry equals 1 the empty cut is realized on (max value, 1] and is
    recorded at the nominal level 1; the all-zero matrix decomposes to that
    single empty cut.
    """
    values = _distinct_positive_values(f)
    levels = list(values)
    cuts = [alpha_cut(f, v) for v in values]
    if not values or values[0] != ONE:
        levels.insert(0, ONE)
        cuts.insert(0, CrispMatrix.zeros(f.order))
    return CutChain(f.order, tuple(levels), tuple(cuts))


def signature(f: FuzzyMatrix) -> ChainSignature:
    """Canonical equivalence-class signature: the cut chain with levels discarded."""
    chain = cut_chain(f)
    return ChainSignature(f.order, chain.cuts)


def rootedness(f: FuzzyMatrix) -> Rootedness:
    """Whether the empty cut and the full cut appear among f's signature cuts."""
    sig = signature(f)
    return Rootedness(o_rooted=sig.o_rooted, j_rooted=sig.j_rooted)


def reconstruct(chain: CutChain) -> FuzzyMatrix:
    """Fuzzy matrix whose entry at each cell is the largest level whose cut holds it."""
    n = chain.order
    grid = [[ZERO] * n for _ in range(n)]
    # Lowest level first, so later (higher) levels overwrite.
    for level, cut in zip(reversed(chain.levels), reversed(chain.cuts)):
        for i, j in cut.support:
            grid[i - 1][j - 1] = level
    return FuzzyMatrix(n, tuple(tuple(row) for row in grid))


def equivalent_direct(a: FuzzyMatrix, b: FuzzyMatrix) -> bool:
    """Entrywise decision: same strict-order pattern and the same 0- and 1-cells."""
    _same_order(a, b)
    av = list(a.values())
    bv = list(b.values())
    for x, y in zip(av, bv):
        if (x == ONE) != (y == ONE) or (x == ZERO) != (y == ZERO):
            return False
    for p in range(len(av)):
        xp, yp = av[p], bv[p]
        for q in range(p + 1, len(av)):
            if (xp > av[q]) != (yp > bv[q]) or (xp < av[q]) != (yp < bv[q]):
                return False
    return True


def equivalent_cuts(a: FuzzyMatrix, b: FuzzyMatrix) -> bool:
    """Cut-chain decision: each matrix realizes exactly the other's distinct cuts."""
    _same_order(a, b)
    return signature(a) == signature(b)


def canonical_representative(sig: ChainSignature) -> FuzzyMatrix:
    """Deterministic class representative: cuts at equally spaced levels i/(k+1)."""
    steps = sig.k + 1
    levels = tuple(Fraction(steps - i, steps) for i in range(steps))
    return reconstruct(CutChain(sig.order, levels, sig.cuts))


@dataclass(frozen=True)
class EquivalenceClass:
    signature: ChainSignature
    representative: FuzzyMatrix
    members: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "signature": self.signature.to_json_dict(),
            "representative": self.representative.to_json_dict(),
            "members": list(self.members),
        }


@dataclass(frozen=True)
class Classification:
    """Partition of a corpus into equivalence classes, keyed by signature."""

    order: int
    classes: tuple[EquivalenceClass, ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def to_json_list(self) -> list[dict]:
        return [cls.to_json_dict() for cls in self.classes]


def classify_corpus(matrices: Iterable[FuzzyMatrix]) -> Classification:
    """Partition same-order matrices into equivalence classes.

    Classes are keyed by signature and reported in a canonical order (by k,
    then cut bitstrings).  Every member is re-checked against its class
    representative with the direct entrywise procedure, so the two decision
    routes cross-validate on every call.
    """
    corpus = list(matrices)
    if not corpus:
        raise ValueError("corpus must be nonempty")
    order = corpus[0].order
    for f in corpus:
        if f.order != order:
            raise ValueError(f"mixed orders in corpus: {f.order} vs {order}")

    by_signature: dict[ChainSignature, list[int]] = {}
    for idx, f in enumerate(corpus):
        by_signature.setdefault(signature(f), []).append(idx)

    classes = []
    for sig in sorted(by_signature, key=lambda s: (s.k, tuple(c.bits for c in s.cuts))):
        rep = canonical_representative(sig)
        members = tuple(by_signature[sig])
        for idx in members:
            if not equivalent_direct(corpus[idx], rep):
                raise RuntimeError(
                    f"classification disagreement on corpus index {idx}: "
                    "cut-chain grouping contradicts the entrywise relation"
                )
        classes.append(EquivalenceClass(sig, rep, members))
    return Classification(order, tuple(classes))
