"""Substring consistent equivalence relations on integer token sequences.

Three relations are supported: plain identity, parameterized matching
(a bijective renaming of token values), and order-isomorphism (same
relative order, including ties). Each relation comes with a canonical
per-window encoding so that two sequences are equivalent iff their
encodings are equal.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence


class ScerKind(enum.Enum):
    """Which equivalence relation to use."""

    IDENTITY = "identity"
    PARAMETERIZED = "param"
    ORDER_ISO = "op"

    @classmethod
    def parse(cls, name: str) -> "ScerKind":
        for kind in cls:
            if kind.value == name:
                return kind
        raise ValueError(f"unknown equivalence relation {name!r}")


class TokenSeq(tuple):
    """Immutable sequence of non-negative integer tokens.

    Positions are 1-based in the public helpers below; internally this is
    just a tuple, so ordinary 0-based indexing and slicing work too.
    """

    __slots__ = ()

    def __new__(cls, tokens: Iterable[int] = ()) -> "TokenSeq":
        seq = super().__new__(cls, tokens)
        for t in seq:
            if not isinstance(t, int) or t < 0:
                raise ValueError(f"tokens must be non-negative integers, got {t!r}")
        return seq

    @classmethod
    def from_bytes(cls, data: bytes) -> "TokenSeq":
        return cls(data)

    @classmethod
    def from_text(cls, text: str) -> "TokenSeq":
        return cls(ord(ch) for ch in text)

    def substring(self, i: int, j: int) -> "TokenSeq":
        """T[i:j] with 1-based inclusive endpoints, 1 <= i <= j <= n."""
        if not (1 <= i <= j <= len(self)):
            raise IndexError(f"substring bounds ({i}, {j}) out of range for length {len(self)}")
        return TokenSeq(tuple.__getitem__(self, slice(i - 1, j)))

    def prefix(self, j: int) -> "TokenSeq":
        """T[:j], the first j tokens (j may be 0)."""
        if not (0 <= j <= len(self)):
            raise IndexError(f"prefix length {j} out of range for length {len(self)}")
        return TokenSeq(tuple.__getitem__(self, slice(0, j)))

    def suffix(self, i: int) -> "TokenSeq":
        """T[i:], the suffix starting at 1-based position i."""
        if not (1 <= i <= len(self) + 1):
            raise IndexError(f"suffix start {i} out of range for length {len(self)}")
        return TokenSeq(tuple.__getitem__(self, slice(i - 1, len(self))))


def prev_encode(tokens: Sequence[int]) -> tuple[int, ...]:
    """Distance to the previous occurrence of the same token, 0 if none.

    Two equal-length sequences are parameterized-equivalent iff their
    encodings are equal.
    """
    last: dict[int, int] = {}
    out = []
    for i, t in enumerate(tokens):
        j = last.get(t)
        out.append(0 if j is None else i - j)
        last[t] = i
    return tuple(out)


def rank_signature(tokens: Sequence[int]) -> tuple[int, ...]:
    """Dense rank of each token among the distinct values of the sequence.

    Two equal-length sequences are order-isomorphic iff their signatures
    are equal; ties map to equal ranks, so equality patterns are captured.
    """
    ranks = {v: r for r, v in enumerate(sorted(set(tokens)))}
    return tuple(ranks[t] for t in tokens)


def _param_equiv(x: Sequence[int], y: Sequence[int]) -> bool:
    fwd: dict[int, int] = {}
    bwd: dict[int, int] = {}
    for a, b in zip(x, y):
        if fwd.setdefault(a, b) != b or bwd.setdefault(b, a) != a:
            return False
    return True


def equiv(x: Sequence[int], y: Sequence[int], kind: ScerKind) -> bool:
    """True iff x and y are equivalent under `kind`. Length mismatch is False."""
    if len(x) != len(y):
        return False
    if kind is ScerKind.IDENTITY:
        return tuple(x) == tuple(y)
    if kind is ScerKind.PARAMETERIZED:
        return _param_equiv(x, y)
    return rank_signature(x) == rank_signature(y)
