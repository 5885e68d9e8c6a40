"""Shallow declaration parsing for Java-like sources.

Builds a declaration tree that stops at class members: packages, imports,
type declarations, fields, methods, constructors, initializer blocks, enum
constants, and annotation members.  Bodies and headers are kept as
verbatim byte spans, so printing a tree reproduces the source exactly;
anything the shallow grammar cannot place raises ParseError, which callers
treat as a signal to fall back to plain textual merging.

Scanning is bracket-balanced and lexer-aware: braces, parentheses, and
separators inside literals or comments never influence structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lexer import BLOCK_COMMENT, CODE, LINE_COMMENT, lex_states


class ParseError(ValueError):
    """Input not representable by the shallow declaration grammar."""


class DuplicateDeclarationError(ParseError):
    """Two sibling declarations share a matching key."""


MODIFIER_WORDS = frozenset(
    {
        "public", "protected", "private", "static", "final", "abstract",
        "synchronized", "native", "strictfp", "transient", "volatile",
        "default", "sealed",
    }
)
_TYPE_KEYWORDS = frozenset({"class", "interface", "enum"})
_WS = frozenset(b" \t\r\n\x0b\x0c")
_WORD_BYTES = frozenset(
    b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_$"
)

ORDERED_KINDS = frozenset({"package", "import"})


@dataclass
class DeclNode:
    kind: str
    identifier: str
    header_text: bytes = b""
    body_text: bytes = b""
    children: list["DeclNode"] = field(default_factory=list)

    @property
    def ordered(self) -> bool:
        return self.kind in ORDERED_KINDS

    def text(self) -> bytes:
        parts = [self.header_text]
        parts.extend(child.text() for child in self.children)
        parts.append(self.body_text)
        return b"".join(parts)

    def key(self) -> tuple[str, str]:
        return (self.kind, self.identifier)


@dataclass
class DeclTree:
    root: DeclNode


def parse_units(source: bytes) -> DeclTree:
    """Parse a compilation unit; raises ParseError for unsupported shapes."""
    tree = _Parser(source).parse()
    if print_units(tree) != source:
        raise ParseError("parsed tree does not reproduce the source")
    return tree


def print_units(tree: DeclTree) -> bytes:
    """Emit a tree back to bytes, headers and bodies verbatim."""
    return tree.root.text()


class _Parser:
    def __init__(self, data: bytes) -> None:
        self.data = data
        self.states = lex_states(data)
        self.n = len(data)

    def parse(self) -> DeclTree:
        children: list[DeclNode] = []
        pos = 0
        while True:
            sig = self._skip_insignificant(pos)
            if sig >= self.n:
                break
            node, pos = self._parse_top_level(pos, sig)
            children.append(node)
        _check_duplicates(children)
        root = DeclNode(
            "compilation-unit", "", b"", self.data[pos:], children
        )
        return DeclTree(root)

    # -- shared low-level scanning ------------------------------------

    def _skip_insignificant(self, i: int) -> int:
        data, states, n = self.data, self.states, self.n
        while i < n:
            st = states[i]
            if st == LINE_COMMENT or st == BLOCK_COMMENT:
                i += 1
            elif st == CODE and data[i] in _WS:
                i += 1
            else:
                break
        return i

    def _read_word(self, i: int) -> tuple[str, int]:
        start = i
        while i < self.n and self.states[i] == CODE and self.data[i] in _WORD_BYTES:
            i += 1
        return self.data[start:i].decode("latin-1"), i

    def _match_delim(self, i: int, open_b: int, close_b: int) -> int:
        """Index of the delimiter closing the one at i (code context only)."""
        depth = 0
        data, states = self.data, self.states
        for k in range(i, self.n):
            if states[k] != CODE:
                continue
            c = data[k]
            if c == open_b:
                depth += 1
            elif c == close_b:
                depth -= 1
                if depth == 0:
                    return k
        raise ParseError("unbalanced delimiters at end of input")

    def _skip_annotation(self, i: int) -> int:
        """Skip ``@Qualified.Name`` plus optional argument list; i is at '@'."""
        i += 1
        i = self._skip_insignificant(i)
        word, i = self._read_word(i)
        if not word:
            raise ParseError("dangling '@'")
        while True:
            j = self._skip_insignificant(i)
            if j < self.n and self.states[j] == CODE and self.data[j] == ord("."):
                j = self._skip_insignificant(j + 1)
                word, i = self._read_word(j)
                if not word:
                    raise ParseError("dangling '.' in annotation name")
            else:
                break
        j = self._skip_insignificant(i)
        if j < self.n and self.states[j] == CODE and self.data[j] == ord("("):
            return self._match_delim(j, ord("("), ord(")")) + 1
        return i

    # -- top level ------------------------------------------------------

    def _parse_top_level(self, start: int, sig: int) -> tuple[DeclNode, int]:
        i = sig
        while True:
            i = self._skip_insignificant(i)
            if i >= self.n:
                raise ParseError("unexpected end of input at top level")
            c = self.data[i]
            if c == ord("@"):
                peek = self._skip_insignificant(i + 1)
                word, _ = self._read_word(peek)
                if word == "interface":
                    return self._parse_type(start, peek, "type", annotation=True)
                i = self._skip_annotation(i)
                continue
            word, after = self._read_word(i)
            if not word:
                raise ParseError(f"unsupported top-level construct at byte {i}")
            if word in ("package", "import"):
                end = self._absorb_semicolons(
                    self._find_code_char(after, ord(";")) + 1
                )
                text = self.data[sig:end]
                ident = " ".join(text.decode("latin-1").split())
                return DeclNode(word, ident, self.data[start:end]), end
            if word in _TYPE_KEYWORDS:
                return self._parse_type(start, i, "type")
            if word in MODIFIER_WORDS or word == "non":
                # "non-sealed" reads as word, '-', word
                i = after
                if word == "non" and i < self.n and self.data[i] == ord("-"):
                    i += 1
                continue
            raise ParseError(f"unsupported top-level declaration near {word!r}")

    def _find_code_char(self, i: int, wanted: int) -> int:
        data, states = self.data, self.states
        for k in range(i, self.n):
            if states[k] == CODE and data[k] == wanted:
                return k
        raise ParseError(f"missing {chr(wanted)!r}")

    # -- type declarations ----------------------------------------------

    def _parse_type(
        self, start: int, kw_pos: int, kind: str, annotation: bool = False
    ) -> tuple[DeclNode, int]:
        word, i = self._read_word(kw_pos)
        is_enum = word == "enum"
        is_annotation = annotation or (
            word == "interface" and kw_pos > 0 and self._at_annotation_kw(kw_pos)
        )
        i = self._skip_insignificant(i)
        name, i = self._read_word(i)
        if not name:
            raise ParseError("type declaration without a name")
        brace = self._find_body_brace(i)
        header = self.data[start:brace + 1]
        if is_enum:
            children, tail_start, close = self._parse_enum_body(brace + 1, name)
        else:
            children, tail_start, close = self._parse_members(
                brace + 1, name, is_annotation
            )
        end = close + 1
        end = self._absorb_semicolons(end)
        _check_duplicates(children)
        body = self.data[tail_start:end]
        return DeclNode("type", name, header, body, children), end

    def _at_annotation_kw(self, kw_pos: int) -> bool:
        k = kw_pos - 1
        while k >= 0 and self.data[k] in _WS:
            k -= 1
        return k >= 0 and self.data[k] == ord("@")

    def _find_body_brace(self, i: int) -> int:
        """First '{' in code context at paren depth 0 (skips annotations)."""
        depth = 0
        data, states = self.data, self.states
        while i < self.n:
            if states[i] != CODE:
                i += 1
                continue
            c = data[i]
            if c == ord("("):
                depth += 1
            elif c == ord(")"):
                depth -= 1
            elif c == ord("{") and depth == 0:
                return i
            elif c == ord(";") and depth == 0:
                raise ParseError("type declaration without a body")
            i += 1
        raise ParseError("missing '{' of type body")

    def _absorb_semicolons(self, end: int) -> int:
        """Consume whitespace-then-';' runs directly after a declaration."""
        while True:
            k = end
            while k < self.n and self.states[k] == CODE and self.data[k] in _WS:
                k += 1
            if k < self.n and self.states[k] == CODE and self.data[k] == ord(";"):
                end = k + 1
            else:
                return end

    # -- enum bodies --------------------------------------------------------

    def _parse_enum_body(
        self, pos: int, enclosing: str
    ) -> tuple[list[DeclNode], int, int]:
        """Constants (possibly with argument lists and bodies), then members."""
        constants: list[DeclNode] = []
        while True:
            sig = self._skip_insignificant(pos)
            if sig >= self.n:
                raise ParseError("unterminated enum body")
            if self.states[sig] == CODE and self.data[sig] == ord("}"):
                return constants, pos, sig
            if self.states[sig] == CODE and self.data[sig] == ord(";"):
                if not constants:
                    raise ParseError("enum body starting with ';'")
                constants[-1].header_text += self.data[pos:sig + 1]
                pos = sig + 1
                break
            node, pos = self._parse_enum_constant(pos, sig)
            constants.append(node)
        members, tail_start, close = self._parse_members(pos, enclosing, False)
        return constants + members, tail_start, close

    def _parse_enum_constant(self, start: int, sig: int) -> tuple[DeclNode, int]:
        i = sig
        while i < self.n and self.states[i] == CODE and self.data[i] == ord("@"):
            i = self._skip_insignificant(self._skip_annotation(i))
        name, i = self._read_word(i)
        if not name:
            raise ParseError(f"expected enum constant near byte {sig}")
        j = self._skip_insignificant(i)
        if j < self.n and self.states[j] == CODE and self.data[j] == ord("("):
            i = self._match_delim(j, ord("("), ord(")")) + 1
            j = self._skip_insignificant(i)
        if j < self.n and self.states[j] == CODE and self.data[j] == ord("{"):
            i = self._match_delim(j, ord("{"), ord("}")) + 1
            j = self._skip_insignificant(i)
        if j < self.n and self.states[j] == CODE and self.data[j] == ord(","):
            i = j + 1
        return DeclNode("enum-constant", name, self.data[start:i]), i

    # -- members ----------------------------------------------------------

    def _parse_members(
        self, pos: int, enclosing: str, in_annotation: bool
    ) -> tuple[list[DeclNode], int, int]:
        """Parse members until the closing '}'.

        Returns (children, tail_start, close_brace_index): the parent keeps
        data[tail_start:close+1...] as its residual body text.
        """
        children: list[DeclNode] = []
        counters = {"initializer": 0}
        while True:
            sig = self._skip_insignificant(pos)
            if sig >= self.n:
                raise ParseError("unterminated type body")
            if self.states[sig] == CODE and self.data[sig] == ord("}"):
                return children, pos, sig
            if self.states[sig] == CODE and self.data[sig] == ord(";"):
                if not children:
                    raise ParseError("stray ';' at start of type body")
                children[-1].body_text += self.data[pos:sig + 1]
                pos = sig + 1
                continue
            node, pos = self._parse_member(pos, sig, enclosing, in_annotation, counters)
            children.append(node)

    def _parse_member(
        self,
        start: int,
        sig: int,
        enclosing: str,
        in_annotation: bool,
        counters: dict[str, int],
    ) -> tuple[DeclNode, int]:
        data, states = self.data, self.states
        i = sig
        words: list[str] = []
        last_word_before_paren = ""
        paren_depth = 0
        angle_depth = 0
        seen_eq = False
        param_span: tuple[int, int] | None = None
        while True:
            i = self._skip_insignificant(i)
            if i >= self.n:
                raise ParseError("unexpected end of input in member")
            if states[i] != CODE:
                i += 1
                continue
            c = data[i]
            if c == ord("@") and paren_depth == 0 and not seen_eq and param_span is None:
                peek = self._skip_insignificant(i + 1)
                word, _ = self._read_word(peek)
                if word == "interface":
                    return self._parse_type(start, peek, "type", annotation=True)
                i = self._skip_annotation(i)
                continue
            if c in _WORD_BYTES:
                word, after = self._read_word(i)
                if (
                    word in _TYPE_KEYWORDS
                    and paren_depth == 0
                    and not seen_eq
                    and param_span is None
                ):
                    return self._parse_type(start, i, "type")
                if (
                    not seen_eq
                    and angle_depth == 0
                    and paren_depth == 0
                    and param_span is None
                ):
                    words.append(word)
                i = after
                continue
            if c == ord("<") and param_span is None and not seen_eq:
                angle_depth += 1
            elif c == ord(">") and angle_depth > 0:
                angle_depth -= 1
            elif c == ord("("):
                if paren_depth == 0 and not seen_eq and param_span is None:
                    open_pos = i
                    close_pos = self._match_delim(i, ord("("), ord(")"))
                    param_span = (open_pos, close_pos)
                    last_word_before_paren = words[-1] if words else ""
                    i = close_pos + 1
                    continue
                paren_depth += 1
            elif c == ord(")"):
                paren_depth -= 1
            elif c == ord("=") and paren_depth == 0:
                seen_eq = True
            elif (
                c == ord(",")
                and paren_depth == 0
                and angle_depth == 0
                and param_span is None
            ):
                seen_eq = False
                words.append(",")
            elif c == ord(";") and paren_depth == 0:
                return self._finish_bodyless(
                    start, sig, i, words, param_span, enclosing, in_annotation
                ), i + 1
            elif c == ord("{") and paren_depth == 0:
                if seen_eq:
                    i = self._match_delim(i, ord("{"), ord("}")) + 1
                    continue
                close = self._match_delim(i, ord("{"), ord("}"))
                significant = [w for w in words if w not in MODIFIER_WORDS]
                if param_span is None and not significant:
                    ident = f"#{counters['initializer']}"
                    counters["initializer"] += 1
                    node = DeclNode(
                        "initializer", ident,
                        data[start:i + 1], data[i + 1:close + 1],
                    )
                    return node, close + 1
                if param_span is None:
                    raise ParseError(
                        f"brace-bodied member without parameter list near byte {i}"
                    )
                name = last_word_before_paren
                kind = self._method_kind(words, name, enclosing, in_annotation)
                ident = self._signature(name, param_span)
                node = DeclNode(
                    kind, ident, data[start:i + 1], data[i + 1:close + 1]
                )
                return node, close + 1
            i += 1

    def _finish_bodyless(
        self, start, sig, semi, words, param_span, enclosing, in_annotation
    ) -> DeclNode:
        text = self.data[start:semi + 1]
        if param_span is not None:
            name = ""
            kind = "method"
            # name is the word right before the parameter list
            head = self.data[sig:param_span[0]]
            name = _trailing_word(head)
            if in_annotation:
                kind = "annotation-member"
            ident = self._signature(name, param_span)
            return DeclNode(kind, ident, text)
        names = _field_names(words)
        if not names:
            raise ParseError(f"could not read field declarator near byte {sig}")
        return DeclNode("field", ",".join(names), text)

    def _method_kind(
        self, words: list[str], name: str, enclosing: str, in_annotation: bool
    ) -> str:
        if in_annotation:
            return "annotation-member"
        significant = [w for w in words if w not in MODIFIER_WORDS]
        if significant and significant[-1] == name:
            significant = significant[:-1]
        if name == enclosing and not significant:
            return "constructor"
        return "method"

    # -- signatures -------------------------------------------------------

    def _signature(self, name: str, param_span: tuple[int, int]) -> str:
        """Matching key: name plus normalized parameter types.

        Whitespace, comments, parameter names, annotations, and generic
        argument sections do not influence the key.
        """
        open_pos, close_pos = param_span
        types = [
            _param_type(chunk)
            for chunk in self._split_params(open_pos + 1, close_pos)
        ]
        return f"{name}({','.join(t for t in types if t)})"

    def _split_params(self, start: int, end: int) -> list[bytes]:
        chunks: list[bytes] = []
        depth = 0
        data, states = self.data, self.states
        piece = bytearray()
        for k in range(start, end):
            st = states[k]
            if st == LINE_COMMENT or st == BLOCK_COMMENT:
                continue
            c = data[k]
            if st == CODE:
                if c in b"(<[{":
                    depth += 1
                elif c in b")>]}":
                    depth -= 1
                elif c == ord(",") and depth == 0:
                    chunks.append(bytes(piece))
                    piece = bytearray()
                    continue
            piece.append(c)
        chunks.append(bytes(piece))
        return [c for c in chunks if c.strip()]


def _trailing_word(head: bytes) -> str:
    k = len(head)
    while k > 0 and head[k - 1] in _WS:
        k -= 1
    j = k
    while j > 0 and head[j - 1] in _WORD_BYTES:
        j -= 1
    return head[j:k].decode("latin-1")


def _field_names(words: list[str]) -> list[str]:
    groups: list[list[str]] = [[]]
    for w in words:
        if w == ",":
            groups.append([])
        else:
            groups[-1].append(w)
    names: list[str] = []
    for idx, group in enumerate(groups):
        bare = [w for w in group if w not in MODIFIER_WORDS]
        if not bare:
            return []
        names.append(bare[-1] if idx == 0 else bare[0])
    return names


def _param_type(chunk: bytes) -> str:
    # erase generic argument sections, then strip annotations and 'final'
    flat = bytearray()
    depth = 0
    for c in chunk:
        if c == ord("<"):
            depth += 1
        elif c == ord(">"):
            depth = max(0, depth - 1)
        elif depth == 0:
            flat.append(c)
    text = bytes(flat)
    tokens: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == ord("@"):
            i += 1
            while i < n and (text[i] in _WORD_BYTES or text[i] == ord(".")):
                i += 1
            while i < n and text[i] in _WS:
                i += 1
            if i < n and text[i] == ord("("):
                depth = 0
                while i < n:
                    if text[i] == ord("("):
                        depth += 1
                    elif text[i] == ord(")"):
                        depth -= 1
                        if depth == 0:
                            i += 1
                            break
                    i += 1
            continue
        if c in _WORD_BYTES or c == ord("."):
            j = i
            while j < n and (text[j] in _WORD_BYTES or text[j] == ord(".")):
                j += 1
            word = text[i:j].decode("latin-1")
            if word == "...":
                tokens.append("...")
            elif word != "final":
                tokens.append(word)
            i = j
            continue
        if c == ord("[") or c == ord("]"):
            tokens.append(chr(c))
        i += 1
    if not tokens:
        return ""
    name_idx = max(
        (k for k, t in enumerate(tokens) if t not in ("[", "]", "...")),
        default=None,
    )
    if name_idx is None or name_idx == 0:
        return "".join(tokens)
    return "".join(tokens[:name_idx] + tokens[name_idx + 1:])


def _check_duplicates(children: list[DeclNode]) -> None:
    seen: set[tuple[str, str]] = set()
    for child in children:
        key = child.key()
        if key in seen:
            raise DuplicateDeclarationError(
                f"duplicate {child.kind} declaration: {child.identifier!r}"
            )
        seen.add(key)
