"""Shared test fixtures: independent brute-force oracles and corpus builders.

The oracles here deliberately avoid the package's bitmask/DFS machinery:
supports are frozensets and chains are found by filtering combinations, so
agreement with the library is a genuine cross-check.
"""

from fractions import Fraction
from itertools import combinations, product

from hypothesis import strategies as st

from cutchains import CrispMatrix, FuzzyMatrix


def brute_force_chains(m, k, root=None):
    """All strict chains of k+1 nested subsets of range(m), as tuples of frozensets."""
    supports = [
        frozenset(c) for size in range(m + 1) for c in combinations(range(m), size)
    ]
    chains = []
    for combo in combinations(supports, k + 1):
        chain = sorted(combo, key=lambda s: (len(s), sorted(s)))
        if not all(a < b for a, b in zip(chain, chain[1:])):
            continue
        if root == "O" and chain[0]:
            continue
        if root == "J" and len(chain[-1]) != m:
            continue
        chains.append(tuple(chain))
    return chains


def bits_to_set(bits):
    """Cell set (0-based positions) of a bitstring."""
    return frozenset(i for i, ch in enumerate(bits) if ch == "1")


def record_to_sets(record):
    return tuple(bits_to_set(b) for b in record.bitstrings())


def grid_values(t):
    """The grid {0, 1} plus t equally spaced interior points."""
    return [Fraction(i, t + 1) for i in range(t + 2)]


def grid_matrices(n, values):
    """Every order-n matrix with entries drawn from the given values."""
    cells = n * n
    for combo in product(values, repeat=cells):
        rows = tuple(tuple(combo[i * n : (i + 1) * n]) for i in range(n))
        yield FuzzyMatrix(n, rows)


def all_crisp(n):
    """All order-n crisp matrices."""
    return [CrispMatrix.from_bits(format(i, f"0{n * n}b") if n else "") for i in range(2 ** (n * n))]


def random_matrix(rng, n, max_denominator=10):
    def value():
        d = rng.randint(1, max_denominator)
        return Fraction(rng.randint(0, d), d)

    return FuzzyMatrix(n, tuple(tuple(value() for _ in range(n)) for _ in range(n)))


def order_preserving_remap(f):
    """An equivalent matrix: interior values replaced by their rank / (count+1)."""
    interior = sorted({v for v in f.values() if 0 < v < 1})
    mapping = {v: Fraction(i + 1, len(interior) + 1) for i, v in enumerate(interior)}
    mapping[Fraction(0)] = Fraction(0)
    mapping[Fraction(1)] = Fraction(1)
    rows = tuple(tuple(mapping[v] for v in row) for row in f.entries)
    return FuzzyMatrix(f.order, rows)


unit_fractions = st.fractions(min_value=0, max_value=1, max_denominator=12)


def fuzzy_matrices(max_order=3):
    """Hypothesis strategy for fuzzy matrices of order 0..max_order."""
    return st.integers(min_value=0, max_value=max_order).flatmap(matrix_of_order)


def matrix_of_order(n):
    rows = st.lists(
        st.lists(unit_fractions, min_size=n, max_size=n), min_size=n, max_size=n
    )
    return rows.map(lambda r: FuzzyMatrix(n, tuple(tuple(row) for row in r)))


def matrix_pairs(max_order=3):
    """Same-order pairs of fuzzy matrices."""
    return st.integers(min_value=0, max_value=max_order).flatmap(
        lambda n: st.tuples(matrix_of_order(n), matrix_of_order(n))
    )
