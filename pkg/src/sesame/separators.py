"""Separator-enhanced preprocessing for textual merging.

The idea: before handing body text to the line merger, isolate every
language-specific separator (``{ } ( ) ;`` for Java) onto its own line so
that text between separators forms its own match unit.  Lines created this
way are prefixed with a placeholder run of ``$`` characters, which lets the
postprocessing step remove exactly the inserted line breaks and prefixes
and recover the original bytes, including from conflict bodies.

Separators inside string literals, character literals, and comments are
never split; see ``lexer``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lexer import CODE, lex_states
from .textmerge import (
    DEFAULT_LABELS,
    Conflict,
    MergeOutcome,
    Resolved,
    merge3,
    split_lines,
)

DEFAULT_SEPARATOR_CHARS = ("{", "}", "(", ")", ";")
PLACEHOLDER_CHAR = b"$"
_BASE_PLACEHOLDER_LEN = 8
_NL = ord("\n")


class MarkingError(ValueError):
    """A placeholder appears somewhere it cannot be reversed from."""


@dataclass(frozen=True)
class SeparatorSet:
    """Ordered, distinct single-character separators."""

    separators: tuple[str, ...] = DEFAULT_SEPARATOR_CHARS

    def __post_init__(self) -> None:
        if not self.separators:
            raise ValueError("separator set must not be empty")
        seen = set()
        for s in self.separators:
            if len(s) != 1:
                raise ValueError(f"separator must be a single character: {s!r}")
            if s in ("\n", "\r"):
                raise ValueError("line terminators cannot be separators")
            if s == "$":
                raise ValueError("the placeholder character cannot be a separator")
            if s in seen:
                raise ValueError(f"duplicate separator: {s!r}")
            seen.add(s)

    @classmethod
    def from_spec(cls, spec: str) -> "SeparatorSet":
        """Parse a comma-separated list like ``"{,},(,),;"``."""
        return cls(tuple(spec.split(",")))

    def as_byte_set(self) -> frozenset[int]:
        return frozenset(ord(s) for s in self.separators)


@dataclass
class MarkedText:
    """A body text with separators isolated onto placeholder-marked lines."""

    lines: list[bytes]
    inserted: list[bool]
    placeholder: bytes
    trailing_newline: bool


def pick_placeholder(texts: list[bytes]) -> bytes:
    """Shortest ``$`` run (doubling from 8) absent from every input."""
    ph = PLACEHOLDER_CHAR * _BASE_PLACEHOLDER_LEN
    while any(ph in t for t in texts):
        ph += ph
    return ph


def mark(
    text: bytes,
    seps: SeparatorSet | None = None,
    placeholder: bytes | None = None,
) -> MarkedText:
    """Isolate each code-context separator onto its own placeholder line.

    Original bytes are never altered, reordered, or deleted; only line
    breaks and placeholder prefixes are inserted.  Text following a
    separator on the same original line continues on a fresh placeholder
    line, so consecutive separators yield consecutive one-character lines.
    """
    seps = seps or SeparatorSet()
    ph = placeholder if placeholder is not None else pick_placeholder([text])
    sep_bytes = seps.as_byte_set()
    states = lex_states(text)
    out = bytearray()
    pending = False  # next ordinary byte continues on an inserted line
    for i, c in enumerate(text):
        if c in sep_bytes and states[i] == CODE:
            out += b"\n" + ph
            out.append(c)
            pending = True
        elif c == _NL:
            out.append(c)
            pending = False
        else:
            if pending:
                out += b"\n" + ph
                pending = False
            out.append(c)
    lines, trailing = split_lines(bytes(out))
    inserted = [line.startswith(ph) for line in lines]
    return MarkedText(lines, inserted, ph, trailing)


def unmark(marked: MarkedText) -> bytes:
    """Reverse ``mark``: drop inserted breaks and placeholder prefixes.

    Applied to an unmerged MarkedText this reproduces the original bytes
    exactly.  A placeholder that is not a line prefix cannot have come from
    marking and raises MarkingError.
    """
    ph = marked.placeholder
    out = bytearray()
    for idx, line in enumerate(marked.lines):
        if line.startswith(ph):
            rest = line[len(ph):]
            if ph in rest:
                raise MarkingError("placeholder found mid-line")
            out += rest
        else:
            if ph in line:
                raise MarkingError("placeholder found mid-line")
            if idx > 0:
                out += b"\n"
            out += line
    if marked.trailing_newline and marked.lines:
        out += b"\n"
    return bytes(out)


def merge_body(
    base: bytes,
    left: bytes,
    right: bytes,
    seps: SeparatorSet | None = None,
    labels: tuple[str, str, str] = DEFAULT_LABELS,
) -> MergeOutcome:
    """Merge three body texts through the separator preprocessing.

    Marks all three versions with one collision-free placeholder, merges
    the marked line sequences, then projects the outcome back to plain
    text: inserted breaks and placeholders are removed from resolved
    regions and from each conflict side separately.
    """
    seps = seps or SeparatorSet()
    ph = pick_placeholder([base, left, right])
    mb = mark(base, seps, ph)
    ml = mark(left, seps, ph)
    mr = mark(right, seps, ph)
    trailing = ml.trailing_newline if ml.trailing_newline != mb.trailing_newline else mr.trailing_newline
    raw = merge3(mb.lines, ml.lines, mr.lines, labels, trailing)
    return _strip_outcome(raw, ph)


def _strip_outcome(raw: MergeOutcome, ph: bytes) -> MergeOutcome:
    regions: list[Resolved | Conflict] = []
    buf = bytearray()
    buffered = 0

    def flush() -> None:
        nonlocal buf, buffered
        if buffered:
            regions.append(Resolved(tuple(bytes(buf).split(b"\n"))))
        buf = bytearray()
        buffered = 0

    for region in raw.regions:
        if isinstance(region, Resolved):
            for line in region.lines:
                if line.startswith(ph):
                    buf += line[len(ph):]
                else:
                    if buffered:
                        buf += b"\n"
                    buf += line
                buffered += 1
        else:
            flush()
            regions.append(
                Conflict(
                    _strip_side(region.left, ph),
                    _strip_side(region.base, ph),
                    _strip_side(region.right, ph),
                )
            )
    flush()
    return MergeOutcome(regions, raw.labels, raw.trailing_newline)


def _strip_side(lines: tuple[bytes, ...], ph: bytes) -> tuple[bytes, ...]:
    if not lines:
        return ()
    side = bytearray()
    first = True
    for line in lines:
        if line.startswith(ph):
            side += line[len(ph):]
        else:
            if not first:
                side += b"\n"
            side += line
        first = False
    return tuple(bytes(side).split(b"\n"))
