"""Line-based three-way merging with diff3 semantics.

Text is modelled as segments split on LF: a CR preceding the LF stays
attached to the segment, and a missing terminator on the final line is
recorded so rendering round-trips byte for byte.  The merge walks regions
that are stable across all three versions; in the gaps between them a
one-sided change wins, identical two-sided changes win, and anything else
becomes a conflict region carrying the left, base, and right payloads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .textdiff import diff2, matching_blocks

DEFAULT_LABELS = ("left", "base", "right")

_MARK_LEFT = b"<<<<<<<"
_MARK_BASE = b"|||||||"
_MARK_SEP = b"======="
_MARK_RIGHT = b">>>>>>>"


class MarkerError(ValueError):
    """Conflict markers in a rendered text are unbalanced."""


def split_lines(data: bytes) -> tuple[list[bytes], bool]:
    """Split on LF, keeping any CR attached; returns (lines, had_final_lf)."""
    if not data:
        return [], True
    parts = data.split(b"\n")
    if parts[-1] == b"":
        return parts[:-1], True
    return parts, False


def join_lines(lines: list[bytes], trailing_newline: bool) -> bytes:
    if not lines:
        return b""
    body = b"\n".join(lines)
    return body + b"\n" if trailing_newline else body


@dataclass(frozen=True)
class Resolved:
    lines: tuple[bytes, ...]


@dataclass(frozen=True)
class Conflict:
    left: tuple[bytes, ...]
    base: tuple[bytes, ...]
    right: tuple[bytes, ...]


@dataclass
class MergeOutcome:
    regions: list[Resolved | Conflict]
    labels: tuple[str, str, str] = DEFAULT_LABELS
    trailing_newline: bool = True

    def conflict_count(self) -> int:
        return sum(1 for r in self.regions if isinstance(r, Conflict))


@dataclass(frozen=True)
class Chunk:
    """One slice of the three-way partition of base/left/right."""

    kind: str  # "stable" | "changed"
    base_range: tuple[int, int]
    left_range: tuple[int, int]
    right_range: tuple[int, int]


def three_way_chunks(
    base: list[bytes], left: list[bytes], right: list[bytes]
) -> list[Chunk]:
    """Partition all three sequences into stable and changed chunks.

    Stable chunks are runs where base, left, and right carry identical
    content at consistent offsets; every index of each sequence lands in
    exactly one chunk.
    """
    left_at = {bi: li for bi, li in diff2(base, left).matches()}
    right_at = {bi: ri for bi, ri in diff2(base, right).matches()}
    chunks: list[Chunk] = []
    bz = lz = rz = 0

    def emit_gap(b_end: int, l_end: int, r_end: int) -> None:
        nonlocal bz, lz, rz
        if b_end > bz or l_end > lz or r_end > rz:
            chunks.append(
                Chunk("changed", (bz, b_end), (lz, l_end), (rz, r_end))
            )
        bz, lz, rz = b_end, l_end, r_end

    i = 0
    n = len(base)
    while i < n:
        if i not in left_at or i not in right_at:
            i += 1
            continue
        start = i
        while (
            i + 1 < n
            and i + 1 in left_at
            and i + 1 in right_at
            and left_at[i + 1] == left_at[i] + 1
            and right_at[i + 1] == right_at[i] + 1
        ):
            i += 1
        emit_gap(start, left_at[start], right_at[start])
        end = i + 1
        chunks.append(
            Chunk(
                "stable",
                (start, end),
                (left_at[start], left_at[start] + end - start),
                (right_at[start], right_at[start] + end - start),
            )
        )
        bz, lz, rz = end, left_at[start] + end - start, right_at[start] + end - start
        i = end
    emit_gap(n, len(left), len(right))
    return chunks


def merge3(
    base: list[bytes],
    left: list[bytes],
    right: list[bytes],
    labels: tuple[str, str, str] = DEFAULT_LABELS,
    trailing_newline: bool = True,
) -> MergeOutcome:
    """Three-way merge of segment sequences (diff3 semantics)."""
    regions: list[Resolved | Conflict] = []
    for chunk in three_way_chunks(base, left, right):
        if chunk.kind == "stable":
            b0, b1 = chunk.base_range
            regions.append(Resolved(tuple(base[b0:b1])))
            continue
        b0, b1 = chunk.base_range
        l0, l1 = chunk.left_range
        r0, r1 = chunk.right_range
        b_gap = base[b0:b1]
        l_gap = left[l0:l1]
        r_gap = right[r0:r1]
        if l_gap == r_gap:
            if l_gap:
                regions.append(Resolved(tuple(l_gap)))
        elif l_gap == b_gap:
            if r_gap:
                regions.append(Resolved(tuple(r_gap)))
        elif r_gap == b_gap:
            if l_gap:
                regions.append(Resolved(tuple(l_gap)))
        else:
            regions.append(Conflict(tuple(l_gap), tuple(b_gap), tuple(r_gap)))
    return MergeOutcome(regions, labels, trailing_newline)


def render(outcome: MergeOutcome, base_marker: bool = False) -> bytes:
    """Render an outcome to bytes; conflicts get standard markers.

    With ``base_marker`` the base payload is included diff3-style between
    a ``|||||||`` line and the ``=======`` separator.
    """
    lname, bname, rname = (s.encode("utf-8") for s in outcome.labels)
    out = bytearray()
    for region in outcome.regions:
        if isinstance(region, Resolved):
            for line in region.lines:
                out += line + b"\n"
            continue
        out += _marker_line(_MARK_LEFT, lname)
        for line in region.left:
            out += line + b"\n"
        if base_marker:
            out += _marker_line(_MARK_BASE, bname)
            for line in region.base:
                out += line + b"\n"
        out += _MARK_SEP + b"\n"
        for line in region.right:
            out += line + b"\n"
        out += _marker_line(_MARK_RIGHT, rname)
    if not outcome.trailing_newline and out.endswith(b"\n"):
        del out[-1:]
    return bytes(out)


def _marker_line(marker: bytes, label: bytes) -> bytes:
    return marker + (b" " + label if label else b"") + b"\n"


def count_conflicts(data: bytes) -> int:
    """Number of conflict blocks in a rendered text.

    Raises MarkerError when an opening marker is unmatched or a closing
    marker appears outside a block.
    """
    count = 0
    open_block = False
    for line in data.split(b"\n"):
        if line.startswith(_MARK_LEFT):
            if open_block:
                raise MarkerError("nested conflict opening marker")
            open_block = True
        elif line.startswith(_MARK_RIGHT):
            if not open_block:
                raise MarkerError("closing marker without opening marker")
            open_block = False
            count += 1
    if open_block:
        raise MarkerError("unterminated conflict block")
    return count


def merge_text(
    base: bytes,
    left: bytes,
    right: bytes,
    labels: tuple[str, str, str] = DEFAULT_LABELS,
    base_marker: bool = False,
) -> tuple[bytes, int]:
    """Merge three byte strings; returns (rendered output, conflict count)."""
    outcome = merge_texts_outcome(base, left, right, labels)
    return render(outcome, base_marker), outcome.conflict_count()


def merge_texts_outcome(
    base: bytes,
    left: bytes,
    right: bytes,
    labels: tuple[str, str, str] = DEFAULT_LABELS,
) -> MergeOutcome:
    b_lines, b_tf = split_lines(base)
    l_lines, l_tf = split_lines(left)
    r_lines, r_tf = split_lines(right)
    trailing = l_tf if l_tf != b_tf else r_tf
    return merge3(b_lines, l_lines, r_lines, labels, trailing)
