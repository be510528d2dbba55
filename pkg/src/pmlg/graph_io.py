"""Text serialization for graphs and patterns.

Graph document (UTF-8, LF endings, '#' lines and blanks ignored on input):

    pmlg 1
    alphabet base4|binary|zigzag6
    directed true|false
    nodes N
    <id> <label>          (N lines, ids 0..N-1 in order)
    edges M
    <u> <v>               (M lines)
    annotations           (optional block)
    <id> <gadget> <j> <h> <kind>

Pattern document:

    pmlgpat 1
    alphabet <name>
    <pattern as one contiguous token>

Writers emit the canonical form; read-then-write reproduces canonical
documents byte for byte.
"""

from __future__ import annotations

from .alphabets import get_alphabet
from .errors import FormatError
from .graph import GADGET_TAGS, KIND_TAGS, LabeledGraph, NodeAnnotation
from .matching import Pattern


class _Lines:
    """Significant-line reader that tracks 1-based document line numbers."""

    def __init__(self, data: bytes | str):
        text = data.decode("utf-8") if isinstance(data, bytes) else data
        self._items: list[tuple[int, str]] = []
        for no, raw in enumerate(text.split("\n"), start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            self._items.append((no, stripped))
        self._pos = 0
        self.last_line = 0

    def next(self, what: str) -> str:
        if self._pos >= len(self._items):
            raise FormatError(f"unexpected end of document, expected {what}")
        no, text = self._items[self._pos]
        self._pos += 1
        self.last_line = no
        return text

    def peek(self) -> str | None:
        if self._pos >= len(self._items):
            return None
        return self._items[self._pos][1]

    def exhausted(self) -> bool:
        return self._pos >= len(self._items)


def _bool_token(value: bool) -> str:
    return "true" if value else "false"


def write_graph(g: LabeledGraph) -> bytes:
    lines = [
        "pmlg 1",
        f"alphabet {g.alphabet.name}",
        f"directed {_bool_token(g.directed)}",
        f"nodes {g.n}",
    ]
    lines.extend(f"{i} {label}" for i, label in enumerate(g.labels))
    lines.append(f"edges {len(g.edges)}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    if g.annotations:
        lines.append("annotations")
        for i in sorted(g.annotations):
            a = g.annotations[i]
            lines.append(f"{i} {a.gadget} {a.j} {a.h} {a.kind}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _parse_int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"expected integer {what}, got {token!r}", line) from None


def read_graph(data: bytes | str) -> LabeledGraph:
    lines = _Lines(data)

    header = lines.next("header")
    if header != "pmlg 1":
        raise FormatError(f"malformed header {header!r}", lines.last_line)

    parts = lines.next("alphabet line").split()
    if len(parts) != 2 or parts[0] != "alphabet":
        raise FormatError("malformed alphabet line", lines.last_line)
    try:
        alphabet = get_alphabet(parts[1])
    except ValueError:
        raise FormatError(f"unknown alphabet {parts[1]!r}", lines.last_line) from None

    parts = lines.next("directed line").split()
    if len(parts) != 2 or parts[0] != "directed" or parts[1] not in ("true", "false"):
        raise FormatError("malformed directed line", lines.last_line)
    directed = parts[1] == "true"

    parts = lines.next("nodes line").split()
    if len(parts) != 2 or parts[0] != "nodes":
        raise FormatError("malformed nodes line", lines.last_line)
    n = _parse_int(parts[1], "node count", lines.last_line)
    if n < 0:
        raise FormatError("negative node count", lines.last_line)

    labels: list[str] = []
    for i in range(n):
        parts = lines.next(f"node line {i}").split()
        if len(parts) != 2:
            raise FormatError("malformed node line", lines.last_line)
        idx = _parse_int(parts[0], "node id", lines.last_line)
        if idx != i:
            raise FormatError(f"node id {idx} out of order (expected {i})", lines.last_line)
        label = parts[1]
        bad = alphabet.check_word(label)
        if bad is not None:
            raise FormatError(f"unknown symbol {bad!r}", lines.last_line)
        labels.append(label)

    parts = lines.next("edges line").split()
    if len(parts) != 2 or parts[0] != "edges":
        raise FormatError("malformed edges line", lines.last_line)
    m = _parse_int(parts[1], "edge count", lines.last_line)
    edges: list[tuple[int, int]] = []
    for k in range(m):
        parts = lines.next(f"edge line {k}").split()
        if len(parts) != 2:
            raise FormatError("malformed edge line", lines.last_line)
        u = _parse_int(parts[0], "edge endpoint", lines.last_line)
        v = _parse_int(parts[1], "edge endpoint", lines.last_line)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError("edge endpoint out of range", lines.last_line)
        edges.append((u, v))

    annotations: dict[int, NodeAnnotation] | None = None
    if not lines.exhausted():
        marker = lines.next("annotations marker")
        if marker != "annotations":
            raise FormatError(f"unexpected content {marker!r}", lines.last_line)
        annotations = {}
        while not lines.exhausted():
            parts = lines.next("annotation line").split()
            if len(parts) != 5:
                raise FormatError("malformed annotation line", lines.last_line)
            idx = _parse_int(parts[0], "node id", lines.last_line)
            if not (0 <= idx < n):
                raise FormatError("annotation node id out of range", lines.last_line)
            gadget, kind = parts[1], parts[4]
            if gadget not in GADGET_TAGS:
                raise FormatError(f"unknown gadget tag {gadget!r}", lines.last_line)
            if kind not in KIND_TAGS:
                raise FormatError(f"unknown kind tag {kind!r}", lines.last_line)
            j = _parse_int(parts[2], "group index", lines.last_line)
            h = _parse_int(parts[3], "position index", lines.last_line)
            annotations[idx] = NodeAnnotation(gadget=gadget, j=j, h=h, kind=kind)

    return LabeledGraph(
        directed=directed,
        alphabet=alphabet,
        labels=tuple(labels),
        edges=tuple(edges),
        annotations=annotations,
    )


def write_pattern(p: Pattern) -> bytes:
    return f"pmlgpat 1\nalphabet {p.alphabet.name}\n{p.symbols}\n".encode("utf-8")


def read_pattern(data: bytes | str) -> Pattern:
    lines = _Lines(data)
    header = lines.next("header")
    if header != "pmlgpat 1":
        raise FormatError(f"malformed header {header!r}", lines.last_line)
    parts = lines.next("alphabet line").split()
    if len(parts) != 2 or parts[0] != "alphabet":
        raise FormatError("malformed alphabet line", lines.last_line)
    try:
        alphabet = get_alphabet(parts[1])
    except ValueError:
        raise FormatError(f"unknown alphabet {parts[1]!r}", lines.last_line) from None
    token = lines.next("pattern token")
    if len(token.split()) != 1:
        raise FormatError("pattern must be one contiguous token", lines.last_line)
    bad = alphabet.check_word(token)
    if bad is not None:
        raise FormatError(f"unknown symbol {bad!r}", lines.last_line)
    if not lines.exhausted():
        lines.next("end of document")
        raise FormatError("trailing content after pattern", lines.last_line)
    return Pattern(token, alphabet)
