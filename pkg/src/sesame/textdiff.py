"""Two-way sequence diffing.

``diff2`` computes a maximal common-subsequence matching between two
segment sequences with Myers' divide-and-conquer algorithm, then
normalizes ambiguous change boundaries the way GNU diff does: runs of
changed lines slide through equal neighbouring lines, merge with adjacent
runs where possible, and otherwise settle at the latest position unless an
earlier position lines up with a change on the other side.  The alignment
this produces is what the three-way merge layer builds its stable regions
from, so the normalization directly shapes where conflicts are reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Alignment:
    """Correspondence between two segment sequences.

    ``pairs`` covers every index of both sequences exactly once, in order.
    A pair with both indices present is a matched, byte-equal segment; a
    one-sided pair is a deletion (left only) or insertion (right only).
    """

    pairs: tuple[tuple[int | None, int | None], ...]

    def matches(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in self.pairs if i is not None and j is not None]

    def match_count(self) -> int:
        return sum(1 for i, j in self.pairs if i is not None and j is not None)


def diff2(a: Sequence[bytes], b: Sequence[bytes]) -> Alignment:
    """Align two segment sequences on a longest common subsequence."""
    matches = lcs_matches(a, b)
    matches = _shift_boundaries(a, b, matches)
    pairs: list[tuple[int | None, int | None]] = []
    ai = bi = 0
    for i, j in matches:
        while ai < i:
            pairs.append((ai, None))
            ai += 1
        while bi < j:
            pairs.append((None, bi))
            bi += 1
        pairs.append((i, j))
        ai, bi = i + 1, j + 1
    while ai < len(a):
        pairs.append((ai, None))
        ai += 1
    while bi < len(b):
        pairs.append((None, bi))
        bi += 1
    return Alignment(tuple(pairs))


def matching_blocks(alignment: Alignment) -> list[tuple[int, int, int]]:
    """Group an alignment's matches into maximal (astart, bstart, size) runs."""
    blocks: list[tuple[int, int, int]] = []
    for i, j in alignment.matches():
        if blocks:
            a0, b0, n = blocks[-1]
            if i == a0 + n and j == b0 + n:
                blocks[-1] = (a0, b0, n + 1)
                continue
        blocks.append((i, j, 1))
    return blocks


def lcs_matches(a: Sequence[bytes], b: Sequence[bytes]) -> list[tuple[int, int]]:
    """Matched index pairs of one longest common subsequence of a and b."""
    table: dict[bytes, int] = {}
    ea = [table.setdefault(x, len(table)) for x in a]
    eb = [table.setdefault(x, len(table)) for x in b]
    out: list[tuple[int, int]] = []
    _lcs_recurse(ea, 0, len(ea), eb, 0, len(eb), out)
    return out


def _lcs_recurse(a, a0, a1, b, b0, b1, out) -> None:
    while a0 < a1 and b0 < b1 and a[a0] == b[b0]:
        out.append((a0, b0))
        a0 += 1
        b0 += 1
    tail: list[tuple[int, int]] = []
    while a1 > a0 and b1 > b0 and a[a1 - 1] == b[b1 - 1]:
        a1 -= 1
        b1 -= 1
        tail.append((a1, b1))
    if a0 < a1 and b0 < b1:
        d, x0, y0, x1, y1 = _middle_snake(a, a0, a1, b, b0, b1)
        if d > 1:
            _lcs_recurse(a, a0, a0 + x0, b, b0, b0 + y0, out)
            for t in range(x1 - x0):
                out.append((a0 + x0 + t, b0 + y0 + t))
            _lcs_recurse(a, a0 + x1, a1, b, b0 + y1, b1, out)
        else:
            # one insertion or deletion apart: greedy pairing is optimal
            i, j = a0, b0
            while i < a1 and j < b1:
                if a[i] == b[j]:
                    out.append((i, j))
                    i += 1
                    j += 1
                elif (a1 - i) > (b1 - j):
                    i += 1
                else:
                    j += 1
    out.extend(reversed(tail))


def _middle_snake(a, a0, a1, b, b0, b1):
    """Myers' bidirectional search: the middle snake of a[a0:a1] x b[b0:b1].

    Returns (edit_distance, x0, y0, x1, y1) with snake coordinates local to
    the subproblem.
    """
    n = a1 - a0
    m = b1 - b0
    delta = n - m
    odd = delta % 2 != 0
    maxd = (n + m + 1) // 2 + 1
    off = maxd + 1
    vf = [0] * (2 * maxd + 3)
    vb = [0] * (2 * maxd + 3)
    vf[off + 1] = 0
    vb[off + 1] = 0
    for d in range(maxd + 1):
        for k in range(-d, d + 1, 2):
            if k == -d or (k != d and vf[off + k - 1] < vf[off + k + 1]):
                x = vf[off + k + 1]
            else:
                x = vf[off + k - 1] + 1
            y = x - k
            xs, ys = x, y
            while x < n and y < m and a[a0 + x] == b[b0 + y]:
                x += 1
                y += 1
            vf[off + k] = x
            if odd and -(d - 1) <= delta - k <= d - 1:
                if vf[off + k] + vb[off + delta - k] >= n:
                    return 2 * d - 1, xs, ys, x, y
        for k in range(-d, d + 1, 2):
            if k == -d or (k != d and vb[off + k - 1] < vb[off + k + 1]):
                x = vb[off + k + 1]
            else:
                x = vb[off + k - 1] + 1
            y = x - k
            xs, ys = x, y
            while x < n and y < m and a[a1 - 1 - x] == b[b1 - 1 - y]:
                x += 1
                y += 1
            vb[off + k] = x
            if not odd and -d <= delta - k <= d:
                if vb[off + k] + vf[off + delta - k] >= n:
                    return 2 * d, n - x, m - y, n - xs, m - ys
    raise AssertionError("middle snake search failed")


def _shift_boundaries(a, b, matches):
    """Normalize change-run boundaries like GNU diff's shift_boundaries."""
    a_changed = bytearray([1]) * len(a)
    b_changed = bytearray([1]) * len(b)
    for i, j in matches:
        a_changed[i] = 0
        b_changed[j] = 0
    _shift_side(a, a_changed, b_changed)
    _shift_side(b, b_changed, a_changed)
    out = []
    i = j = 0
    n, m = len(a), len(b)
    while True:
        while i < n and a_changed[i]:
            i += 1
        while j < m and b_changed[j]:
            j += 1
        if i >= n or j >= m:
            break
        out.append((i, j))
        i += 1
        j += 1
    return out


def _shift_side(lines, changed, other_changed) -> None:
    # Throughout, j tracks the position in the other sequence that pairs
    # with the unchanged line at the current run's end.
    i = 0
    j = 0
    i_end = len(lines)
    j_end = len(other_changed)
    while True:
        while i < i_end and not changed[i]:
            while j < j_end and other_changed[j]:
                j += 1
            j += 1
            i += 1
        if i >= i_end:
            break
        start = i
        i += 1
        while i < i_end and changed[i]:
            i += 1
        while j < j_end and other_changed[j]:
            j += 1
        while True:
            runlength = i - start
            # Slide the run up while the line before it equals its last
            # line; this can merge it with a preceding run.
            while start > 0 and lines[start - 1] == lines[i - 1]:
                changed[start - 1] = 1
                changed[i - 1] = 0
                start -= 1
                i -= 1
                while start > 0 and changed[start - 1]:
                    start -= 1
                j -= 1
                while j > 0 and other_changed[j]:
                    j -= 1
            # Remember the latest end position at which this run lined up
            # with a change in the other sequence.
            corresponding = i if j > 0 and other_changed[j - 1] else i_end
            # Slide the run down while its first line equals the line after
            # it; this can merge it with a following run.  Done second so a
            # run that merges with nothing settles at its latest position.
            while i < i_end and lines[start] == lines[i]:
                changed[start] = 0
                changed[i] = 1
                start += 1
                i += 1
                while i < i_end and changed[i]:
                    i += 1
                j += 1
                while j < j_end and other_changed[j]:
                    corresponding = i
                    j += 1
            if runlength == i - start:
                break
        # Prefer the position where the run faces a change in the other
        # sequence over the latest position.
        while corresponding < i:
            changed[start - 1] = 1
            changed[i - 1] = 0
            start -= 1
            i -= 1
            while start > 0 and changed[start - 1]:
                start -= 1
            j -= 1
            while j > 0 and other_changed[j]:
                j -= 1
