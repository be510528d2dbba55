"""Compilers from orthogonal-vectors instances into hardness benchmark graphs.

All three constructions share one idea: the pattern lists the first vector
set X as fixed-width blocks separated by markers, and the graph encodes the
second set Y as per-vector gadgets that a block can traverse exactly when
the two vectors are orthogonal.  Universal ("jolly") gadgets absorb the
blocks that should not be tested, so a full-pattern match exists if and only
if some block crosses some vector gadget, i.e. iff an orthogonal pair exists.

Variants:
  undirected   four-symbol alphabet, unrestricted degree
  dag          the same graph with edges oriented left-to-right
  det-dag      a merged construction whose DAG is deterministic (out-neighbor
               labels start with distinct symbols)
  zigzag       a single undirected path over a six-symbol alphabet; matching
               walks reverse direction inside it

`encode_binary` maps the four-symbol variants down to a binary alphabet.

Builders are pure: the same instance always yields byte-identical artifacts.
Node ids are dense and assigned in construction order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .alphabets import BASE4, BINARY, ZIGZAG6, Alphabet
from .errors import TriviallyOrthogonalError
from .graph import LabeledGraph, NodeAnnotation, expand_labels
from .matching import Pattern
from .ov import OvInstance, Vector

VARIANTS = ("undirected", "dag", "det-dag", "zigzag")

# Linearized encodings for the path variant.  Both strings are even-length
# palindromes: palindromic chains stay traversable from either end (the
# universal chain must absorb blocks walking right-to-left), and even length
# rules out same-side excursions that would let a block consume a chain
# without crossing it.
ENC_ONE = "ABBA"
ENC_ZERO = "ABBBBA"
JOLLY_CHAIN = "ABBA"  # crossed by ENC_ONE directly and by ENC_ZERO zig-zagging
ZERO_ONLY_CHAIN = "ABBBBA"  # too long for ENC_ONE, crossed by ENC_ZERO


@dataclass(frozen=True)
class ReductionArtifact:
    """A compiled instance: graph, query pattern(s), and build metadata."""

    variant: str
    graph: LabeledGraph
    patterns: tuple[Pattern, ...]
    n: int
    d: int
    binary_encoded: bool = False
    padded: bool = False


@dataclass(frozen=True)
class Fragment:
    """A gadget graph plus its begin/end ports keyed by 1-based group index."""

    graph: LabeledGraph
    b_ports: dict[int, int]
    e_ports: dict[int, int]


class _GraphBuilder:
    def __init__(self, alphabet: Alphabet, directed: bool):
        self.alphabet = alphabet
        self.directed = directed
        self.labels: list[str] = []
        self.arcs: list[tuple[int, int]] = []
        self.ann: dict[int, NodeAnnotation] = {}
        self._cursor: int | None = None

    def node(self, label: str, gadget: str, j: int, h: int, kind: str) -> int:
        idx = len(self.labels)
        self.labels.append(label)
        self.ann[idx] = NodeAnnotation(gadget=gadget, j=j, h=h, kind=kind)
        return idx

    def arc(self, u: int, v: int) -> None:
        self.arcs.append((u, v))

    def chain_node(self, label: str, gadget: str, j: int, h: int, kind: str) -> int:
        """Append a node linked to the previously appended chain node."""
        idx = self.node(label, gadget, j, h, kind)
        if self._cursor is not None:
            self.arc(self._cursor, idx)
        self._cursor = idx
        return idx

    def freeze(self) -> LabeledGraph:
        return LabeledGraph(
            directed=self.directed,
            alphabet=self.alphabet,
            labels=tuple(self.labels),
            edges=tuple(self.arcs),
            annotations=dict(self.ann),
        )


def _bits_string(x: Vector) -> str:
    return "".join("1" if b else "0" for b in x)


def build_pattern(X: Sequence[Vector]) -> Pattern:
    """Query pattern for the four-symbol variants.

    Blocks are the X vectors written as 0/1 strings, separated by "eb", with
    a doubled begin marker in front and a doubled end marker behind:
    bb <x1> eb <x2> eb ... <xn> ee.  Length is exactly n*(d+2)+2.
    """
    if len(X) == 0:
        raise ValueError("X must be nonempty")
    return Pattern("bb" + "eb".join(_bits_string(x) for x in X) + "ee", BASE4)


def _emit_gw(bld: _GraphBuilder, Y: Sequence[Vector]) -> tuple[dict[int, int], dict[int, int]]:
    """Vector-checking gadget: one group per y, chained begin-to-end.

    Group j has a begin node, one 0-node per position, a 1-node exactly at
    the positions where y_j is 0, and an end node; consecutive positions are
    fully interconnected.  A block "b<bits>e" fits through group j iff its
    vector is orthogonal to y_j.
    """
    d = len(Y[0])
    b_ports: dict[int, int] = {}
    e_ports: dict[int, int] = {}
    for j, y in enumerate(Y, start=1):
        b = bld.node("b", "GW", j, 0, "B")
        zero: dict[int, int] = {}
        one: dict[int, int] = {}
        for h in range(1, d + 1):
            zero[h] = bld.node("0", "GW", j, h, "zero-node")
            if y[h - 1] == 0:
                one[h] = bld.node("1", "GW", j, h, "one-node")
        e = bld.node("e", "GW", j, d + 1, "E")
        b_ports[j], e_ports[j] = b, e

        bld.arc(b, zero[1])
        if 1 in one:
            bld.arc(b, one[1])
        for h in range(1, d):
            for s in (zero[h], one.get(h)):
                if s is None:
                    continue
                bld.arc(s, zero[h + 1])
                if h + 1 in one:
                    bld.arc(s, one[h + 1])
        bld.arc(zero[d], e)
        if d in one:
            bld.arc(one[d], e)
        if j > 1:
            bld.arc(e_ports[j - 1], b)
    return b_ports, e_ports


def _emit_gu(
    bld: _GraphBuilder, count: int, d: int, tag: str
) -> tuple[dict[int, int], dict[int, int]]:
    """Universal gadget: `count` chained sub-gadgets that accept every block."""
    b_ports: dict[int, int] = {}
    e_ports: dict[int, int] = {}
    for j in range(1, count + 1):
        b = bld.node("b", tag, j, 0, "B")
        zero: dict[int, int] = {}
        one: dict[int, int] = {}
        for h in range(1, d + 1):
            zero[h] = bld.node("0", tag, j, h, "zero-node")
            one[h] = bld.node("1", tag, j, h, "one-node")
        e = bld.node("e", tag, j, d + 1, "E")
        b_ports[j], e_ports[j] = b, e

        bld.arc(b, zero[1])
        bld.arc(b, one[1])
        for h in range(1, d):
            for s in (zero[h], one[h]):
                bld.arc(s, zero[h + 1])
                bld.arc(s, one[h + 1])
        bld.arc(zero[d], e)
        bld.arc(one[d], e)
        if j > 1:
            bld.arc(e_ports[j - 1], b)
    return b_ports, e_ports


def build_gw(Y: Sequence[Vector]) -> Fragment:
    """Stand-alone vector-checking gadget (undirected)."""
    if len(Y) == 0:
        raise ValueError("Y must be nonempty")
    bld = _GraphBuilder(BASE4, directed=False)
    b_ports, e_ports = _emit_gw(bld, Y)
    return Fragment(bld.freeze(), b_ports, e_ports)


def build_gu(count: int, d: int, tag: str = "GU1") -> Fragment:
    """Stand-alone universal gadget with `count` sub-gadgets (0 allowed)."""
    if count < 0 or d < 1:
        raise ValueError("need count >= 0 and d >= 1")
    bld = _GraphBuilder(BASE4, directed=False)
    b_ports, e_ports = _emit_gu(bld, count, d, tag)
    return Fragment(bld.freeze(), b_ports, e_ports)


def _add_pendants(
    bld: _GraphBuilder,
    b_targets: Iterable[tuple[int, int]],
    e_targets: Iterable[tuple[int, int]],
    d: int,
) -> None:
    """Attach degree-1 begin/end markers creating the unique bb / ee anchors."""
    for j, port in b_targets:
        p = bld.node("b", "pendant", j, 0, "B")
        bld.arc(p, port)
    for j, port in e_targets:
        p = bld.node("e", "pendant", j, d + 1, "E")
        bld.arc(port, p)


def assemble_undirected(inst: OvInstance) -> ReductionArtifact:
    """Full undirected artifact: universal rows above and below the checking
    row, cross-connections, pendant markers, and the block pattern."""
    n, d = inst.n, inst.d
    count = 2 * n - 2
    bld = _GraphBuilder(BASE4, directed=False)
    u1_b, u1_e = _emit_gu(bld, count, d, "GU1")
    w_b, w_e = _emit_gw(bld, inst.Y)
    u2_b, u2_e = _emit_gu(bld, count, d, "GU2")
    if count:
        for j in range(1, n + 1):
            bld.arc(u1_e[n - 2 + j], w_b[j])
        for j in range(1, n + 1):
            bld.arc(w_e[j], u2_b[j])
    _add_pendants(
        bld,
        b_targets=[(j, u1_b[j]) for j in sorted(u1_b)] + [(j, w_b[j]) for j in sorted(w_b)],
        e_targets=[(j, w_e[j]) for j in sorted(w_e)] + [(j, u2_e[j]) for j in sorted(u2_e)],
        d=d,
    )
    graph = bld.freeze()
    assert len(graph.edges) <= 24 * n * (d + 2), "edge budget exceeded"
    return ReductionArtifact(
        variant="undirected",
        graph=graph,
        patterns=(build_pattern(inst.X),),
        n=n,
        d=d,
    )


_STRATUM = {"GU1": 0, "GW": 1, "GU2": 2}


def _orientation_key(ann: NodeAnnotation) -> tuple[int, int, int]:
    if ann.gadget == "pendant":
        return (-1 if ann.kind == "B" else 3, ann.j, ann.h)
    return (_STRATUM[ann.gadget], ann.j, ann.h)


def orient_to_dag(art: ReductionArtifact) -> ReductionArtifact:
    """Direct every edge of an undirected artifact left-to-right.

    Orientation follows construction coordinates: within a group by position,
    between groups by index, across rows top (universal) to middle (checking)
    to bottom, and pendants point into begin ports / out of end ports.
    """
    if art.variant != "undirected":
        raise ValueError("orient_to_dag expects an undirected artifact")
    if art.binary_encoded:
        raise ValueError("orient before binary encoding, not after")
    g = art.graph
    if not g.annotations or len(g.annotations) != g.n:
        raise ValueError("artifact is missing construction annotations")
    directed_edges: list[tuple[int, int]] = []
    for u, v in g.edges:
        ku = _orientation_key(g.annotations[u])
        kv = _orientation_key(g.annotations[v])
        if ku == kv:
            raise ValueError(f"cannot orient edge ({u}, {v}): equal coordinates")
        directed_edges.append((u, v) if ku < kv else (v, u))
    graph = LabeledGraph(
        directed=True,
        alphabet=g.alphabet,
        labels=g.labels,
        edges=tuple(directed_edges),
        annotations=g.annotations,
    )
    return ReductionArtifact(
        variant="dag",
        graph=graph,
        patterns=art.patterns,
        n=art.n,
        d=art.d,
        binary_encoded=art.binary_encoded,
        padded=art.padded,
    )


def build_deterministic_dag(inst: OvInstance) -> ReductionArtifact:
    """Deterministic DAG variant.

    The checking row and the upper universal row are merged: inside every
    group j < n the first position whose 1-node is missing gets a fresh
    1-node that reroutes into a partial universal sub-gadget covering the
    remaining positions, whose end node leads to the next group.  The direct
    end-to-begin edge between consecutive groups is dropped, which removes
    the only source of equal-first-symbol out-neighbors.  Groups stay intact,
    so block-through-group traversals still certify orthogonality.

    Rejects instances with an all-zero y vector: they have no missing
    position to reroute through, and their answer is trivially positive.
    """
    n, d = inst.n, inst.d
    for y in inst.Y:
        if all(b == 0 for b in y):
            raise TriviallyOrthogonalError(
                "trivially-orthogonal instance: an all-zero y vector is orthogonal "
                "to every x; answer it directly instead of building a graph"
            )
    bld = _GraphBuilder(BASE4, directed=True)

    prefix_b, prefix_e = _emit_gu(bld, n - 1, d, "GU1")

    w_b: dict[int, int] = {}
    w_e: dict[int, int] = {}
    merged_exit: dict[int, int] = {}  # j -> end node of the partial sub-gadget
    for j, y in enumerate(inst.Y, start=1):
        merged = j <= n - 1
        b = bld.node("b", "GW", j, 0, "B")
        zero: dict[int, int] = {}
        one: dict[int, int] = {}
        for h in range(1, d + 1):
            zero[h] = bld.node("0", "GW", j, h, "zero-node")
            if y[h - 1] == 0:
                one[h] = bld.node("1", "GW", j, h, "one-node")
        e = bld.node("e", "GW", j, d + 1, "E")
        w_b[j], w_e[j] = b, e

        new_v1 = None
        pzero: dict[int, int] = {}
        pone: dict[int, int] = {}
        e_part = None
        h_star = 0
        if merged:
            h_star = min(h for h in range(1, d + 1) if y[h - 1] == 1)
            new_v1 = bld.node("1", "GWU", j, h_star, "one-node")
            for h in range(h_star + 1, d + 1):
                pzero[h] = bld.node("0", "GWU", j, h, "zero-node")
                pone[h] = bld.node("1", "GWU", j, h, "one-node")
            e_part = bld.node("e", "GWU", j, d + 1, "E")

        def one_at(h: int) -> int | None:
            if h in one:
                return one[h]
            if not merged:
                return None
            return new_v1 if h == h_star else pone[h]

        # Checking-row arcs; missing 1-nodes fall through to the merged copies.
        bld.arc(b, zero[1])
        t = one_at(1)
        if t is not None:
            bld.arc(b, t)
        for h in range(1, d):
            t = one_at(h + 1)
            for s in (zero[h], one.get(h)):
                if s is None:
                    continue
                bld.arc(s, zero[h + 1])
                if t is not None:
                    bld.arc(s, t)
        bld.arc(zero[d], e)
        if d in one:
            bld.arc(one[d], e)

        if merged:
            if h_star < d:
                bld.arc(new_v1, pzero[h_star + 1])
                bld.arc(new_v1, pone[h_star + 1])
                for h in range(h_star + 1, d):
                    for s in (pzero[h], pone[h]):
                        bld.arc(s, pzero[h + 1])
                        bld.arc(s, pone[h + 1])
                bld.arc(pzero[d], e_part)
                bld.arc(pone[d], e_part)
            else:
                bld.arc(new_v1, e_part)
            merged_exit[j] = e_part

        if j > 1:
            bld.arc(merged_exit[j - 1], b)
    if n >= 2:
        bld.arc(prefix_e[n - 1], w_b[1])

    count = 2 * n - 2
    u2_b, u2_e = _emit_gu(bld, count, d, "GU2")
    if count:
        for j in range(1, n + 1):
            bld.arc(w_e[j], u2_b[j])

    _add_pendants(
        bld,
        b_targets=[(j, prefix_b[j]) for j in sorted(prefix_b)]
        + [(j, w_b[j]) for j in sorted(w_b)],
        e_targets=[(j, w_e[j]) for j in sorted(w_e)] + [(j, u2_e[j]) for j in sorted(u2_e)],
        d=d,
    )
    graph = bld.freeze()
    assert len(graph.edges) <= 24 * n * (d + 2), "edge budget exceeded"
    return ReductionArtifact(
        variant="det-dag",
        graph=graph,
        patterns=(build_pattern(inst.X),),
        n=n,
        d=d,
    )


_ALPHA = {"b": "10", "e": "01", "0": "0000", "1": "1111"}


def encode_binary(art: ReductionArtifact) -> ReductionArtifact:
    """Map a four-symbol artifact onto the binary alphabet.

    Labels go through b->10, e->01, 0->0000, 1->1111 and are then expanded
    into single-symbol chains.  The pattern gains a leading e and a trailing
    b before encoding so its encoded begin/end anchors stay unique, and each
    pendant begin marker gets a new e-node in front (each pendant end marker
    a new b-node behind) to keep those anchors matchable.

    For deterministic-DAG inputs, encoded chain heads that would collect more
    than two predecessors are duplicated so the in-plus-out degree stays at
    most three; duplication preserves spelling, determinism and acyclicity.
    """
    if art.variant == "zigzag":
        raise ValueError("zigzag artifacts cannot be binary-encoded")
    if art.graph.alphabet.name != "base4":
        raise ValueError("binary encoding requires a base4 artifact")
    g = art.graph
    if not g.annotations or len(g.annotations) != g.n:
        raise ValueError("artifact is missing construction annotations")

    labels = list(g.labels)
    edges = list(g.edges)
    ann = dict(g.annotations)
    for i in range(g.n):
        a = ann[i]
        if a.gadget != "pendant":
            continue
        if a.kind == "B":
            new = len(labels)
            labels.append("e")
            ann[new] = NodeAnnotation("pendant", a.j, 0, "E")
            edges.append((new, i))
        else:
            new = len(labels)
            labels.append("b")
            ann[new] = NodeAnnotation("pendant", a.j, a.h + 1, "B")
            edges.append((i, new))

    mapped = LabeledGraph(
        directed=g.directed,
        alphabet=BINARY,
        labels=tuple(_ALPHA[c] for c in labels),
        edges=tuple(edges),
        annotations=ann,
    )
    expanded, _ = expand_labels(mapped)
    if art.variant == "det-dag":
        expanded = _split_heavy_heads(expanded)

    patterns = tuple(
        Pattern("".join(_ALPHA[c] for c in "e" + p.symbols + "b"), BINARY)
        for p in art.patterns
    )
    return ReductionArtifact(
        variant=art.variant,
        graph=expanded,
        patterns=patterns,
        n=art.n,
        d=art.d,
        binary_encoded=True,
        padded=art.padded,
    )


def _split_heavy_heads(g: LabeledGraph) -> LabeledGraph:
    """Duplicate nodes with 3+ predecessors so every node keeps at most 2.

    Only applies to single-successor nodes (chain heads); each extra pair of
    predecessors gets its own copy pointing at the original successor.
    """
    preds: dict[int, list[int]] = {}
    succs: dict[int, list[int]] = {}
    for u, v in g.edges:
        preds.setdefault(v, []).append(u)
        succs.setdefault(u, []).append(v)
    heavy = [v for v in range(g.n) if len(preds.get(v, ())) >= 3]
    if not heavy:
        return g

    labels = list(g.labels)
    ann = dict(g.annotations) if g.annotations else {}
    redirect: dict[tuple[int, int], int] = {}
    extra_edges: list[tuple[int, int]] = []
    for v in heavy:
        out = succs.get(v, [])
        if len(out) != 1:
            raise ValueError(f"cannot split node {v}: expected a single successor")
        for chunk_start in range(2, len(preds[v]), 2):
            clone = len(labels)
            labels.append(g.labels[v])
            if v in ann:
                ann[clone] = ann[v]
            for u in preds[v][chunk_start : chunk_start + 2]:
                redirect[(u, v)] = clone
            extra_edges.append((clone, out[0]))

    new_edges = [(u, redirect.get((u, v), v)) for u, v in g.edges]
    new_edges.extend(extra_edges)
    return LabeledGraph(
        directed=g.directed,
        alphabet=g.alphabet,
        labels=tuple(labels),
        edges=tuple(new_edges),
        annotations=ann or None,
    )


# --- path (zig-zag) variant ---------------------------------------------


def _encode_subpattern(x: Vector) -> str:
    return "x" + "x".join(ENC_ONE if b else ENC_ZERO for b in x) + "x"


def build_zigzag_patterns(X: Sequence[Vector]) -> tuple[Pattern, Pattern, bool]:
    """The two query patterns for the path variant.

    Blocks are separator-framed bit encodings joined by y markers inside a
    global "b y ... y e" frame.  A block can only cross the checking chain
    when an odd number of blocks runs on each side of it, so the block count
    is padded to an odd total with all-ones dummy blocks (one for even n,
    two for odd n) and the second pattern swaps adjacent blocks; between the
    two patterns every original block gets a crossing slot.  The dummy block
    encodes the all-ones vector, which only crosses a gadget whose y vector
    is all zero, and in that case every block crosses it, so padding never
    changes the answer.
    """
    if len(X) == 0:
        raise ValueError("X must be nonempty")
    d = len(X[0])
    subs = [_encode_subpattern(x) for x in X]
    dummy = _encode_subpattern((1,) * d)
    subs.extend([dummy] * (1 if len(X) % 2 == 0 else 2))

    swapped = list(subs)
    for i in range(0, len(swapped) - 1, 2):
        swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]

    def wrap(parts: list[str]) -> Pattern:
        return Pattern("b" + "".join("y" + s for s in parts) + "ye", ZIGZAG6)

    return wrap(subs), wrap(swapped), True


def _chain_kinds(chain: str) -> Iterator[str]:
    for ch in chain:
        yield "A" if ch == "A" else "Bc"


def _lgw_sequence(y: Vector, j: int) -> Iterator[tuple[str, NodeAnnotation]]:
    """Framed checking chain: y x C1 x C2 ... Cd x y, where Ch is the
    zero-only chain when y[h] = 1 and the jolly chain otherwise."""
    d = len(y)
    yield "y", NodeAnnotation("LGW", j, 0, "Y")
    for h in range(1, d + 1):
        yield "x", NodeAnnotation("LGW", j, h, "X")
        chain = ZERO_ONLY_CHAIN if y[h - 1] == 1 else JOLLY_CHAIN
        for ch, kind in zip(chain, _chain_kinds(chain)):
            yield ch, NodeAnnotation("LGW", j, h, kind)
    yield "x", NodeAnnotation("LGW", j, d + 1, "X")
    yield "y", NodeAnnotation("LGW", j, d + 2, "Y")


def _lgu_sequence(d: int, j: int) -> Iterator[tuple[str, NodeAnnotation]]:
    """Universal chain: x J x J ... x with a jolly chain at every position."""
    for h in range(1, d + 1):
        yield "x", NodeAnnotation("LGU", j, h, "X")
        for ch, kind in zip(JOLLY_CHAIN, _chain_kinds(JOLLY_CHAIN)):
            yield ch, NodeAnnotation("LGU", j, h, kind)
    yield "x", NodeAnnotation("LGU", j, d + 1, "X")


def _path_graph(seq: Iterable[tuple[str, NodeAnnotation]]) -> LabeledGraph:
    bld = _GraphBuilder(ZIGZAG6, directed=False)
    for label, a in seq:
        bld.chain_node(label, a.gadget, a.j, a.h, a.kind)
    return bld.freeze()


def build_lgw(y: Vector) -> LabeledGraph:
    """Stand-alone framed checking chain; node 0 is the left end."""
    if len(y) < 1:
        raise ValueError("y must be nonempty")
    return _path_graph(_lgw_sequence(tuple(y), 1))


def build_lgu(d: int) -> LabeledGraph:
    """Stand-alone universal chain (no y frame); node 0 is the left end."""
    if d < 1:
        raise ValueError("d must be at least 1")
    return _path_graph(_lgu_sequence(d, 1))


def assemble_zigzag(inst: OvInstance) -> ReductionArtifact:
    """Path artifact: per y vector a block
    b y [universal] [framed checking chain] [universal] y e,
    all blocks concatenated into one undirected path."""
    n, d = inst.n, inst.d
    bld = _GraphBuilder(ZIGZAG6, directed=False)
    for j, y in enumerate(inst.Y, start=1):
        bld.chain_node("b", "LGW", j, 0, "B")
        bld.chain_node("y", "LGW", j, 0, "Y")
        for label, a in _lgu_sequence(d, j):
            bld.chain_node(label, a.gadget, a.j, a.h, a.kind)
        for label, a in _lgw_sequence(tuple(y), j):
            bld.chain_node(label, a.gadget, a.j, a.h, a.kind)
        for label, a in _lgu_sequence(d, j):
            bld.chain_node(label, a.gadget, a.j, a.h, a.kind)
        bld.chain_node("y", "LGW", j, d + 2, "Y")
        bld.chain_node("e", "LGW", j, d + 3, "E")
    graph = bld.freeze()
    assert len(graph.edges) <= 24 * n * (d + 2), "edge budget exceeded"
    p1, p2, padded = build_zigzag_patterns(inst.X)
    return ReductionArtifact(
        variant="zigzag",
        graph=graph,
        patterns=(p1, p2),
        n=n,
        d=d,
        padded=padded,
    )
