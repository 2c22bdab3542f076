"""Shared helpers: exhaustive string universes and cached brute-force sets."""

from functools import lru_cache
from itertools import product

from quasicover.scer import ScerKind

KINDS = tuple(ScerKind)

# Paper's running example (identity: Table 1, parameterized: Table 2).
EXAMPLE_TEXT = tuple(ord(c) for c in "abaababaabaababa")
TABLE1_BORDER = [0, 0, 1, 1, 2, 3, 2, 3, 4, 5, 6, 4, 5, 6, 7, 8]
TABLE1_SCOVER = [1, 2, 3, 4, 5, 3, 7, 3, 9, 5, 3, 12, 5, 3, 15, 3]
TABLE1_LCOVER = [0, 0, 0, 0, 0, 3, 0, 3, 0, 5, 6, 0, 5, 6, 0, 8]
TABLE2_BORDER = [0, 1, 2, 1, 2, 3, 3, 3, 4, 5, 6, 4, 5, 6, 7, 8]
TABLE2_SCOVER = [1] * 16
TABLE2_LCOVER = [0, 1, 2, 1, 2, 3, 3, 3, 1, 5, 6, 1, 5, 6, 3, 8]


def strings(max_len, alphabet_size, min_len=0):
    """All tuples over range(alphabet_size) with min_len <= length <= max_len."""
    for n in range(min_len, max_len + 1):
        yield from product(range(alphabet_size), repeat=n)


def acceptance_universe():
    """Every string of length <= 10 over 2 letters and <= 8 over 3 letters."""
    yield from strings(10, 2)
    for s in strings(8, 3, min_len=1):
        if max(s) == 2:  # skip strings already covered by the binary pass
            yield s


def maximal_acceptance_strings():
    """Length-10 binary and length-8 ternary strings.

    The per-prefix arrays are online, so checking them on these covers
    every string in the acceptance universe.
    """
    yield from product(range(2), repeat=10)
    yield from product(range(3), repeat=8)


@lru_cache(maxsize=None)
def cov_set(s: tuple, kind: ScerKind) -> frozenset:
    from quasicover.oracle import brute_cover_set

    return frozenset(brute_cover_set(s, kind))


@lru_cache(maxsize=None)
def bord_set(s: tuple, kind: ScerKind) -> frozenset:
    from quasicover.oracle import brute_border_set

    return frozenset(brute_border_set(s, kind))


@lru_cache(maxsize=None)
def lseed_set(s: tuple, kind: ScerKind) -> frozenset:
    from quasicover.oracle import brute_left_seeds

    return frozenset(brute_left_seeds(s, kind, len(s)))
