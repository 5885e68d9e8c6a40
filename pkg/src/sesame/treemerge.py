"""Superimposition of declaration trees and declaration-aware merging.

Trees from the three versions of a file are matched level-wise by kind and
identifier.  Declarations added on one side are juxtaposed at their
insertion anchors, deletions against an untouched counterpart are honored,
and a declaration changed on both sides has its text merged by the active
body policy: plain line merging, or separator-enhanced merging.  Conflicts
are data: they end up as marker blocks embedded in the printed output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .javaparse import DeclNode, DeclTree, ORDERED_KINDS
from .separators import SeparatorSet, merge_body
from .textmerge import DEFAULT_LABELS, merge_text, render

PLAIN_TEXTUAL = "plain-textual"
SEPARATOR_ENHANCED = "separator-enhanced"


@dataclass(frozen=True)
class BodyMergePolicy:
    """How the text of a declaration changed on both sides is merged."""

    mode: str = PLAIN_TEXTUAL
    separators: SeparatorSet = field(default_factory=SeparatorSet)

    def __post_init__(self) -> None:
        if self.mode not in (PLAIN_TEXTUAL, SEPARATOR_ENHANCED):
            raise ValueError(f"unknown body merge mode: {self.mode!r}")


@dataclass
class MatchedNode:
    """One declaration matched across base, left, and right."""

    base: DeclNode | None
    left: DeclNode | None
    right: DeclNode | None
    children: list["MatchedNode"] = field(default_factory=list)

    def kind(self) -> str:
        for node in (self.base, self.left, self.right):
            if node is not None:
                return node.kind
        raise ValueError("empty matched node")


def match_trees(base: DeclTree, left: DeclTree, right: DeclTree) -> MatchedNode:
    """Match three parsed trees level-wise by kind and identifier."""
    return _match_nodes(base.root, left.root, right.root)


def _match_nodes(b: DeclNode, l: DeclNode, r: DeclNode) -> MatchedNode:
    node = MatchedNode(b, l, r)
    node.children = _match_children(b.children, l.children, r.children)
    return node


def _match_children(
    b_nodes: list[DeclNode], l_nodes: list[DeclNode], r_nodes: list[DeclNode]
) -> list[MatchedNode]:
    by_key_b = {n.key(): n for n in b_nodes}
    by_key_l = {n.key(): n for n in l_nodes}
    by_key_r = {n.key(): n for n in r_nodes}
    keys = _ordered_keys(b_nodes, l_nodes, r_nodes)
    out: list[MatchedNode] = []
    for key in keys:
        b = by_key_b.get(key)
        l = by_key_l.get(key)
        r = by_key_r.get(key)
        m = MatchedNode(b, l, r)
        if (
            b is not None
            and l is not None
            and r is not None
            and b.kind == "type"
        ):
            m.children = _match_children(b.children, l.children, r.children)
        out.append(m)
    return out


def _ordered_keys(b_nodes, l_nodes, r_nodes) -> list[tuple[str, str]]:
    """Base order, then left's additions at their anchors, then right's.

    An added declaration is placed after its nearest predecessor already in
    the list; at a shared anchor, right's additions follow left's.
    """
    keys = [n.key() for n in b_nodes]
    present = set(keys)
    last = -1
    for n in l_nodes:
        k = n.key()
        if k in present:
            last = keys.index(k)
        else:
            keys.insert(last + 1, k)
            present.add(k)
            last += 1
    r_keys = {n.key() for n in r_nodes}
    last = -1
    for n in r_nodes:
        k = n.key()
        if k in present:
            last = keys.index(k)
        else:
            pos = last + 1
            while pos < len(keys) and keys[pos] not in r_keys:
                pos += 1
            keys.insert(pos, k)
            present.add(k)
            last = pos
    return keys


def merge_matched(
    matched: MatchedNode,
    policy: BodyMergePolicy,
    labels: tuple[str, str, str] = DEFAULT_LABELS,
    base_marker: bool = False,
) -> DeclNode | None:
    """Merge one matched node; None means the declaration was removed."""
    b, l, r = matched.base, matched.left, matched.right
    if b is not None and l is not None and r is not None:
        if b.kind in ("compilation-unit", "type"):
            return _merge_container(matched, policy, labels, base_marker)
        return DeclNode(
            b.kind,
            b.identifier,
            _merge_leaf_texts(
                b.text(), l.text(), r.text(), b.kind, policy, labels, base_marker
            ),
        )
    if b is None:
        if l is not None and r is not None:
            if l.text() == r.text():
                return l
            merged, _ = merge_text(b"", l.text(), r.text(), labels, base_marker)
            return DeclNode(l.kind, l.identifier, merged)
        return l if l is not None else r
    if l is None and r is None:
        return None
    other = l if l is not None else r
    if other.text() == b.text():
        return None
    left_text = l.text() if l is not None else b""
    right_text = r.text() if r is not None else b""
    merged, _ = merge_text(b.text(), left_text, right_text, labels, base_marker)
    return DeclNode(b.kind, b.identifier, merged)


def merge_trees(
    base: DeclTree,
    left: DeclTree,
    right: DeclTree,
    policy: BodyMergePolicy,
    labels: tuple[str, str, str] = DEFAULT_LABELS,
    base_marker: bool = False,
) -> bytes:
    matched = match_trees(base, left, right)
    merged = merge_matched(matched, policy, labels, base_marker)
    assert merged is not None
    return merged.text()


def _merge_container(
    matched: MatchedNode,
    policy: BodyMergePolicy,
    labels: tuple[str, str, str],
    base_marker: bool,
) -> DeclNode:
    b, l, r = matched.base, matched.left, matched.right
    header = _merge_fragment(
        b.header_text, l.header_text, r.header_text, labels, base_marker
    )
    tail = _merge_fragment(b.body_text, l.body_text, r.body_text, labels, base_marker)
    children: list[DeclNode] = []
    imports_done = False
    for child in matched.children:
        if child.kind() == "import":
            if not imports_done:
                imports_done = True
                block = _merge_import_block(b, l, r, labels, base_marker)
                if block is not None:
                    children.append(block)
            continue
        node = merge_matched(child, policy, labels, base_marker)
        if node is not None:
            children.append(node)
    children, tail = _guard_marker_lines(header, children, tail)
    return DeclNode(b.kind, b.identifier, header, tail, children)


def _guard_marker_lines(
    header: bytes, children: list[DeclNode], tail: bytes
) -> tuple[list[DeclNode], bytes]:
    """Keep conflict markers on their own lines when embedding merged parts.

    A merged declaration can begin with an opening marker (its leading
    whitespace landed inside the conflict) or end in an unterminated
    closing-marker line; insert a line break at such joints.  The very
    start of the document is already a fresh line.
    """

    def tail_line(state: bytes | None, piece: bytes) -> bytes | None:
        if not piece:
            return state
        if b"\n" in piece:
            return piece.rsplit(b"\n", 1)[1]
        return (state or b"") + piece

    def needs_break(state: bytes | None, piece: bytes) -> bool:
        if state is None or state == b"" or not piece:
            return False
        if piece.startswith(b"<<<<<<<"):
            return True
        return state.startswith(b">>>>>>>") and not piece.startswith(b"\n")

    state = tail_line(None, header) if header else None
    fixed: list[DeclNode] = []
    for child in children:
        text = child.text()
        if needs_break(state, text):
            child = DeclNode(
                child.kind,
                child.identifier,
                b"\n" + child.header_text,
                child.body_text,
                list(child.children),
            )
            text = b"\n" + text
        state = tail_line(state, text)
        fixed.append(child)
    if needs_break(state, tail):
        tail = b"\n" + tail
    return fixed, tail


def _merge_import_block(
    b: DeclNode, l: DeclNode, r: DeclNode, labels, base_marker
) -> DeclNode | None:
    """Imports are order-sensitive: the whole section merges as one text block."""
    bt = _import_text(b)
    lt = _import_text(l)
    rt = _import_text(r)
    merged = _merge_fragment(bt, lt, rt, labels, base_marker)
    if not merged:
        return None
    return DeclNode("import", "<imports>", merged)


def _import_text(cu: DeclNode) -> bytes:
    return b"".join(c.text() for c in cu.children if c.kind == "import")


def _merge_fragment(bt, lt, rt, labels, base_marker) -> bytes:
    if lt == bt:
        return rt
    if rt == bt or lt == rt:
        return lt
    merged, _ = merge_text(bt, lt, rt, labels, base_marker)
    return merged


def _merge_leaf_texts(
    bt: bytes,
    lt: bytes,
    rt: bytes,
    kind: str,
    policy: BodyMergePolicy,
    labels: tuple[str, str, str],
    base_marker: bool,
) -> bytes:
    if lt == bt:
        return rt
    if rt == bt or lt == rt:
        return lt
    if kind in ORDERED_KINDS or policy.mode == PLAIN_TEXTUAL:
        merged, _ = merge_text(bt, lt, rt, labels, base_marker)
        return merged
    outcome = merge_body(bt, lt, rt, policy.separators, labels)
    return render(outcome, base_marker)
