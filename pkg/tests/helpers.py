"""Checks shared between the fast lemma tests and the acceptance suite.

Each check returns silently or raises AssertionError with the offending
string; callers decide the universe to sweep.
"""

from conftest import bord_set, cov_set, lseed_set
from quasicover.scer import equiv


def check_cover_border_lemmas(s, kind):
    """Cover/border structure of one string: containment, transitivity,
    nesting, overlap, and the proper-cover reach characterization."""
    n = len(s)
    covers = sorted(cov_set(s, kind))
    borders = sorted(bord_set(s, kind))

    # a cover of T no longer than a border B of T also covers B
    for c in covers:
        for b in borders:
            if c <= b and b >= 1:
                assert c in cov_set(s[:b], kind), (s, kind, "cover-of-border", c, b)

    # covers of covers are covers; shorter covers cover longer ones
    for c in covers:
        for c2 in cov_set(s[:c], kind):
            assert c2 in cov_set(s, kind), (s, kind, "cover-of-cover", c, c2)
        for c2 in covers:
            if c <= c2:
                assert c in cov_set(s[:c2], kind), (s, kind, "nesting", c, c2)

    # overlap: a common cover of a prefix and an overlapping suffix covers T
    for i in range(1, n + 1):
        suffix = s[i - 1 :]
        for j in range(i - 1, n + 1):
            for c in cov_set(s[:j], kind):
                if c in cov_set(suffix, kind) and equiv(s[:c], s[i - 1 : i - 1 + c], kind):
                    assert c in cov_set(s, kind), (s, kind, "overlap", i, j, c)

    # a proper cover is a border that covers some slightly shorter prefix
    for c in range(1, n):
        lhs = c in cov_set(s, kind)
        rhs = c in bord_set(s, kind) and any(
            c <= n - i and c in cov_set(s[: n - i], kind) for i in range(1, c + 1)
        )
        assert lhs == rhs, (s, kind, "reach-characterization", c)


def check_left_seed_lemmas(s, kind):
    """Left-seed structure of one string: primary range and the
    cover/left-seed composition across a prefix-suffix split."""
    from quasicover.oracle import brute_border_array

    n = len(s)
    border = brute_border_array(s, kind)
    seeds = lseed_set(s, kind)

    # every length in [n - Border[n], n] is a left seed
    if n >= 1:
        for j in range(n - border[n - 1], n + 1):
            assert j in seeds, (s, kind, "primary-left-seed", j)

    # covering T[:n-k] while left-seeding the length-l suffix (k <= l)
    # makes a left seed of T
    for l in range(0, n + 1):
        suffix = s[n - l :]
        for k in range(0, l + 1):
            for m in cov_set(s[: n - k], kind):
                if m <= l and m in lseed_set(suffix, kind) and equiv(
                    s[:m], s[n - l : n - l + m], kind
                ):
                    assert m in seeds, (s, kind, "cov-lseed-composition", k, l, m)


def check_arrays_match_oracle(s, kind):
    """Fast border/cover arrays equal the brute-force ones for one string."""
    from quasicover.border import border_array, border_array_generic
    from quasicover.covers import (
        longest_cover_array,
        longest_cover_array_li_smyth,
        shortest_cover_array,
    )
    from quasicover.oracle import brute_border_array, brute_lcover, brute_scover

    b = brute_border_array(s, kind)
    assert border_array(s, kind) == b, (s, kind, "border")
    assert border_array_generic(s, kind) == b, (s, kind, "border-generic")
    assert list(shortest_cover_array(b).scover) == brute_scover(s, kind), (s, kind, "scover")
    expected = brute_lcover(s, kind)
    assert list(longest_cover_array(b).lcover) == expected, (s, kind, "lcover")
    assert list(longest_cover_array_li_smyth(b).lcover) == expected, (s, kind, "lcover-ls")


def check_left_seeds_match_oracle(s, kind):
    from quasicover.border import border_array
    from quasicover.covers import left_seed_lengths, longest_cover_array
    from quasicover.oracle import brute_left_seeds

    b = border_array(s, kind)
    lca = longest_cover_array(b)
    n = len(s)
    assert left_seed_lengths(b, lca, n) == brute_left_seeds(s, kind, n), (s, kind, "lseeds")
