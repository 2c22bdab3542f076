"""Border arrays under the supported equivalence relations.

A border array maps each prefix length i to the length of the longest
proper border of T[:i] under the chosen relation. Identity and
parameterized matching get online failure-function builders; any relation
can use the quadratic generic builder, which only needs the equivalence
predicate.
"""

from __future__ import annotations

from typing import Sequence

from .scer import ScerKind, TokenSeq, equiv, prev_encode


def validate_border_array(values: Sequence[int]) -> None:
    """Raise ValueError unless `values` can be a border array.

    Checks 0 <= values[i] < i for every 1-based i and the step property
    values[i-1] + 1 >= values[i]. Both cover-array algorithms index with
    these values, so malformed input must be rejected up front.
    """
    prev = 0
    for k, v in enumerate(values):
        i = k + 1
        if not (0 <= v < i):
            raise ValueError(f"border value {v} out of range at position {i}")
        if v > prev + 1:
            raise ValueError(f"border array violates step property at position {i}: {prev} -> {v}")
        prev = v


class BorderBuilder:
    """Online border-array builder for identity and parameterized matching.

    Feed tokens one at a time with push(); `values` holds the border array
    of the tokens seen so far. `link_follows` counts failure-link descents
    (amortized, at most 2n over the whole run).
    """

    def __init__(self, kind: ScerKind):
        if kind not in (ScerKind.IDENTITY, ScerKind.PARAMETERIZED):
            raise ValueError(f"no online border builder for {kind.value}")
        self.kind = kind
        self.values: list[int] = []
        self.link_follows = 0
        self._prev: list[int] = []  # prev-encoding of the text so far
        self._last: dict[int, int] = {}
        self._tokens: list[int] = []

    def _code(self, i: int, offset: int) -> int:
        # Token at text index i viewed at window offset `offset` (both 0-based).
        if self.kind is ScerKind.IDENTITY:
            return self._tokens[i]
        p = self._prev[i]
        return p if p <= offset else 0

    def push(self, token: int) -> int:
        i = len(self._tokens)
        self._tokens.append(token)
        j = self._last.get(token)
        self._prev.append(0 if j is None else i - j)
        self._last[token] = i

        if i == 0:
            self.values.append(0)
            return 0
        b = self.values[i - 1]
        while b > 0 and self._code(i, b) != self._code(b, b):
            b = self.values[b - 1]
            self.link_follows += 1
        if self._code(i, b) == self._code(b, b):
            b += 1
        else:
            b = 0
        self.values.append(b)
        return b

    def extend(self, tokens: Sequence[int]) -> list[int]:
        for t in tokens:
            self.push(t)
        return self.values


def border_array_generic(text: Sequence[int], kind: ScerKind) -> list[int]:
    """Quadratic border-array builder valid for any of the relations.

    Candidates at position i descend one by one from values[i-1] + 1; the
    first b with T[:b] equivalent to T[i-b+1:i] wins. Decrementing by 1
    (rather than chasing failure links) is unconditionally correct for
    every relation, at O(n^2) cost per equivalence check.
    """
    t = TokenSeq(text) if not isinstance(text, TokenSeq) else text
    values: list[int] = []
    for i in range(1, len(t) + 1):
        b = values[-1] + 1 if values else 0
        if b >= i:
            b = i - 1
        while b > 0 and not equiv(t.prefix(b), t.substring(i - b + 1, i), kind):
            b -= 1
        values.append(b)
    return values


def border_array(text: Sequence[int], kind: ScerKind) -> list[int]:
    """Border array of `text` under `kind`.

    Identity and parameterized use the online failure-function builder;
    order-isomorphism falls back to the generic quadratic builder.
    """
    if kind is ScerKind.ORDER_ISO:
        return border_array_generic(text, kind)
    return BorderBuilder(kind).extend(text)


def read_border_file(path: str) -> list[int]:
    """Parse a border array file: one integer per line, line i = Border[i]."""
    values: list[int] = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                values.append(int(line))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: not an integer: {line!r}") from None
    validate_border_array(values)
    return values
