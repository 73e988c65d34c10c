"""Rooted nesting trees of ovals and their canonical string form.

The ambient isotopy class of a curve in the projective plane is a rooted
tree: one node per complement region, one edge per oval (nesting), with
the non-orientable region at the root and, in odd degree, a pseudoline
marker J on the root.  Strings follow Rohlin-Viro notation in ASCII:

    scheme := "<0>" | "<" items ">"
    items  := item (" u " item)*
    item   := "J" | INT | INT "<" items ">"

"<0>" is the empty scheme, a bare integer k means k unnested ovals,
"k<X>" means k ovals whose interiors all carry the scheme X, and " u "
joins disjoint pieces.  J may appear only as the first top-level item.
The canonical form renders, at every node, the unnested-oval count first
and then the nested groups sorted by the byte order of their interior
strings; equal interiors merge into one counted group.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError


@dataclass
class SchemeNode:
    children: list["SchemeNode"] = field(default_factory=list)

    def count(self) -> int:
        return 1 + sum(c.count() for c in self.children)


@dataclass
class SchemeTree:
    root: SchemeNode
    has_pseudoline: bool

    def oval_count(self) -> int:
        return self.root.count() - 1


def _canonical_items(node: SchemeNode) -> str:
    """Canonical rendering of a node's interior (the part inside brackets)."""
    parts = sorted(_canonical_items(c) for c in node.children)
    items: list[str] = []
    k = 0
    while k < len(parts):
        run = k
        while run < len(parts) and parts[run] == parts[k]:
            run += 1
        count = run - k
        items.append(str(count) if parts[k] == "" else f"{count}<{parts[k]}>")
        k = run
    return " u ".join(items)


def canonical_scheme(tree: SchemeTree) -> str:
    """Canonical string of a scheme tree; inverse of :func:`parse_scheme`."""
    inner = _canonical_items(tree.root)
    if tree.has_pseudoline:
        return f"<J u {inner}>" if inner else "<J>"
    return f"<{inner}>" if inner else "<0>"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(msg, position=self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def items(self, top: bool) -> tuple[list[SchemeNode], bool]:
        children: list[SchemeNode] = []
        pseudoline = False
        first = True
        while True:
            if self.peek() == "J":
                if not (top and first):
                    self.error("J is allowed only first at top level")
                self.pos += 1
                pseudoline = True
            else:
                n = self.integer()
                if n < 1:
                    self.error("item count must be positive")
                if n > 1_000_000:
                    self.error("item count too large")
                if self.peek() == "<":
                    self.pos += 1
                    inner, _ = self.items(top=False)
                    self.expect(">")
                    for _ in range(n):
                        node = SchemeNode()
                        node.children = [
                            _copy_node(c) for c in inner
                        ]
                        children.append(node)
                else:
                    children.extend(SchemeNode() for _ in range(n))
            first = False
            if self.text.startswith(" u ", self.pos):
                self.pos += 3
                continue
            return children, pseudoline


def _copy_node(node: SchemeNode) -> SchemeNode:
    fresh = SchemeNode()
    fresh.children = [_copy_node(c) for c in node.children]
    return fresh


def parse_scheme(text: str) -> SchemeTree:
    """Parse a scheme string; canonicalizing afterwards is idempotent."""
    p = _Parser(text)
    p.expect("<")
    if p.peek() == "0":
        p.pos += 1
        p.expect(">")
        if p.pos != len(text):
            p.error("trailing input after scheme")
        return SchemeTree(SchemeNode(), has_pseudoline=False)
    children, pseudoline = p.items(top=True)
    p.expect(">")
    if p.pos != len(text):
        p.error("trailing input after scheme")
    root = SchemeNode()
    root.children = children
    return SchemeTree(root, has_pseudoline=pseudoline)
