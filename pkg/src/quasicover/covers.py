"""Shortest and longest cover arrays, cover-tree queries, and left seeds.

Everything here consumes only a border array; the equivalence relation is
fully encoded in it. Both array algorithms are online: the builders accept
one border value per prefix and can be driven incrementally (the CLI's
streaming mode does exactly that). Batch wrappers are provided for the
common case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence


@dataclass(frozen=True)
class ShortestCoverArray:
    """Per-prefix shortest cover lengths plus the final reach state.

    scover[i-1] is the length of the shortest cover of T[:i] (equal to i
    exactly when T[:i] is primitive). reach[j-1] is the longest prefix
    length that the primitive prefix T[:j] covers, 0 for non-primitive j.
    """

    scover: tuple[int, ...]
    reach: tuple[int, ...]
    op_count: int = 0


@dataclass(frozen=True)
class LongestCoverArray:
    """Per-prefix longest proper cover lengths and the cover-tree state.

    lcover[i-1] is the longest proper cover length of T[:i], 0 if none.
    The cover tree has nodes 0..n with parent(i) = lcover[i] and root 0;
    ls_children / longest_ls_anc are the auxiliary arrays at completion,
    indexed 0..n. dead is populated only by the descending-loop variant.
    """

    lcover: tuple[int, ...]
    ls_children: tuple[int, ...]
    longest_ls_anc: tuple[int, ...]
    dead: tuple[bool, ...] | None = None
    while_successes: int = 0
    op_count: int = 0


class ShortestCoverBuilder:
    """Online shortest-cover-array computation from streamed border values.

    Maintains the invariant that reach[j] is the longest prefix covered by
    the primitive prefix T[:j] seen so far (0 for non-primitive or unseen j).
    """

    def __init__(self) -> None:
        self.scover: list[int] = []
        self.reach: list[int] = []  # reach[j-1] for prefix length j
        self.op_count = 0
        self._prev_border = 0

    def push(self, b: int) -> int:
        i = len(self.scover) + 1
        if not (0 <= b < i) or b > self._prev_border + 1:
            raise ValueError(f"invalid border value {b} at position {i}")
        self._prev_border = b
        self.reach.append(0)
        if b > 0:
            c = self.scover[b - 1]
            if self.reach[c - 1] >= i - c:
                self.scover.append(c)
                self.reach[c - 1] = i
                self.op_count += 2
                return c
        self.scover.append(i)
        self.reach[i - 1] = i
        self.op_count += 2
        return i


class LongestCoverBuilder:
    """Online longest-cover-array computation from streamed border values.

    Grows the cover tree one node per prefix. ls_children[j] counts
    children of j that are left seeds of the current prefix;
    longest_ls_anc[j] is the lowest left-seed ancestor of j. The inner
    loop walks prefix lengths ascending, which keeps every node's
    children count from being decremented after it reaches zero.
    """

    def __init__(self) -> None:
        self.lcover: list[int] = [0]  # node-indexed; entry 0 is the root sentinel
        self.ls_children: list[int] = [0]
        self.longest_ls_anc: list[int] = [0]
        self.while_successes = 0
        self.op_count = 0
        self.trace: list[int] | None = None  # set to [] to record retired nodes
        self._prev_border = 0

    def push(self, b: int) -> int:
        i = len(self.lcover)
        if not (0 <= b < i) or b > self._prev_border + 1:
            raise ValueError(f"invalid border value {b} at position {i}")
        self.ls_children.append(0)
        self.longest_ls_anc.append(i)

        if self.ls_children[b] == 0 and 0 < 2 * b < i:
            self.longest_ls_anc[b] = self.longest_ls_anc[self.lcover[b]]
        lc = self.longest_ls_anc[b]
        self.lcover.append(lc)
        self.ls_children[lc] += 1
        self.op_count += 1
        if i > 1:
            c1 = i - b
            c2 = (i - 1) - self._prev_border
            for j in range(c2, c1):
                self.op_count += 1
                while self.ls_children[j] == 0:
                    if self.trace is not None:
                        self.trace.append(j)
                    self.ls_children[self.lcover[j]] -= 1
                    j = self.lcover[j]
                    self.while_successes += 1
                    self.op_count += 1
        self._prev_border = b
        return lc


StateObserver = Callable[[int, "LongestCoverBuilder"], None]


def shortest_cover_array(
    border: Sequence[int],
    after_iteration: Callable[[int, ShortestCoverBuilder], None] | None = None,
) -> ShortestCoverArray:
    """Shortest cover array from a border array.

    `after_iteration(i, builder)`, if given, is called once per prefix with
    the builder state; tests use it to check the online invariants.
    """
    builder = ShortestCoverBuilder()
    for i, b in enumerate(border, start=1):
        builder.push(b)
        if after_iteration is not None:
            after_iteration(i, builder)
    return ShortestCoverArray(
        scover=tuple(builder.scover),
        reach=tuple(builder.reach),
        op_count=builder.op_count,
    )


def longest_cover_array(
    border: Sequence[int],
    after_increment: StateObserver | None = None,
    after_iteration: StateObserver | None = None,
) -> LongestCoverArray:
    """Longest proper cover array from a border array (ascending inner loop).

    The observers, if given, are called with (i, builder) right after the
    children-count increment and at the end of each prefix's iteration.
    """
    builder = LongestCoverBuilder()
    for i, b in enumerate(border, start=1):
        if after_increment is None:
            builder.push(b)
        else:
            _push_observed(builder, b, after_increment)
        if after_iteration is not None:
            after_iteration(i, builder)
    return LongestCoverArray(
        lcover=tuple(builder.lcover[1:]),
        ls_children=tuple(builder.ls_children),
        longest_ls_anc=tuple(builder.longest_ls_anc),
        while_successes=builder.while_successes,
        op_count=builder.op_count,
    )


def _push_observed(builder: LongestCoverBuilder, b: int, after_increment: StateObserver) -> None:
    # Same as LongestCoverBuilder.push but with a hook between the
    # children-count increment and the inner loop.
    i = len(builder.lcover)
    if not (0 <= b < i) or b > builder._prev_border + 1:
        raise ValueError(f"invalid border value {b} at position {i}")
    builder.ls_children.append(0)
    builder.longest_ls_anc.append(i)
    if builder.ls_children[b] == 0 and 0 < 2 * b < i:
        builder.longest_ls_anc[b] = builder.longest_ls_anc[builder.lcover[b]]
    lc = builder.longest_ls_anc[b]
    builder.lcover.append(lc)
    builder.ls_children[lc] += 1
    after_increment(i, builder)
    if i > 1:
        c1 = i - b
        c2 = (i - 1) - builder._prev_border
        for j in range(c2, c1):
            while builder.ls_children[j] == 0:
                builder.ls_children[builder.lcover[j]] -= 1
                j = builder.lcover[j]
                builder.while_successes += 1
    builder._prev_border = b


@dataclass
class _LiSmythState:
    lcover: list[int]
    ls_children: list[int]
    longest_ls_anc: list[int]
    dead: list[bool]


def longest_cover_array_li_smyth(
    border: Sequence[int],
    after_increment: Callable[[int, "_LiSmythState"], None] | None = None,
) -> LongestCoverArray:
    """Longest cover array via the descending inner loop with a dead array.

    Behaves identically to longest_cover_array on the output side but
    processes the vacated prefix-length range top-down, which requires
    marking already-retired nodes as dead so they are not decremented
    twice. The internal parent of the root is -1 and never exported.
    """
    from .border import validate_border_array

    validate_border_array(border)
    n = len(border)
    st = _LiSmythState(
        lcover=[-1] + [0] * n,
        ls_children=[0] * (n + 1),
        longest_ls_anc=list(range(n + 1)),
        dead=[False] * (n + 1),
    )

    def set_dead(j: int) -> None:
        while j >= 0 and st.ls_children[j] == 0 and not st.dead[j]:
            st.dead[j] = True
            st.ls_children[st.lcover[j]] -= 1
            j = st.lcover[j]

    for i in range(1, n + 1):
        b = border[i - 1]
        if st.dead[b]:
            st.longest_ls_anc[b] = st.longest_ls_anc[st.lcover[b]]
        st.lcover[i] = st.longest_ls_anc[b]
        st.ls_children[st.lcover[i]] += 1
        if after_increment is not None:
            after_increment(i, st)
        if i > 1:
            c1 = i - b
            c2 = (i - 1) - border[i - 2]
            for j in range(c1 - 1, c2 - 1, -1):
                set_dead(j)
    return LongestCoverArray(
        lcover=tuple(st.lcover[1:]),
        ls_children=tuple(st.ls_children),
        longest_ls_anc=tuple(st.longest_ls_anc),
        dead=tuple(st.dead),
    )


def all_cover_lengths(lca: LongestCoverArray, i: int) -> list[int]:
    """All lengths j such that T[:j] covers T[:i], ascending, including i.

    These are exactly the ancestors of node i in the cover tree, read off
    by following lcover until the root.
    """
    if not (1 <= i <= len(lca.lcover)):
        raise IndexError(f"position {i} out of range for length {len(lca.lcover)}")
    chain = []
    j = i
    while j > 0:
        chain.append(j)
        j = lca.lcover[j - 1]
    chain.reverse()
    return chain


def is_primitive(sca: ShortestCoverArray, i: int) -> bool:
    """True iff T[:i] has no proper cover."""
    if not (1 <= i <= len(sca.scover)):
        raise IndexError(f"position {i} out of range for length {len(sca.scover)}")
    return sca.scover[i - 1] == i


def left_seed_lengths(border: Sequence[int], lca: LongestCoverArray, i: int) -> list[int]:
    """All prefix lengths that are left seeds of T[:i], ascending.

    Every length in [i - Border[i], i] is a left seed, and the remaining
    ones are exactly the cover-tree ancestors of those; the union of the
    ancestor chains gives the full set. lcover values are online (entry k
    depends only on border[1..k]), so the full-text cover tree serves any
    prefix query directly.
    """
    if not (1 <= i <= len(lca.lcover)) or i > len(border):
        raise IndexError(f"position {i} out of range for length {len(lca.lcover)}")
    seeds: set[int] = set()
    for k in range(i - border[i - 1], i + 1):
        j = k
        while j > 0 and j not in seeds:
            seeds.add(j)
            j = lca.lcover[j - 1]
    return sorted(seeds)
