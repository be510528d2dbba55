"""Node-labeled graph model, structural validators, and label expansion.

Graphs are immutable after construction and every function in this module is
pure, so shared graphs are safe to use from concurrent workers.  Node ids are
dense integers assigned in construction order; undirected edges are stored
canonically with the smaller endpoint first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .alphabets import Alphabet

# Construction metadata vocabulary.  Annotations exist for structural tests
# only and are never consulted by the matcher.
GADGET_TAGS = ("GW", "GU1", "GU2", "GWU", "LGW", "LGU", "pendant")
KIND_TAGS = ("B", "E", "zero-node", "one-node", "X", "Y", "A", "Bc")


@dataclass(frozen=True)
class NodeAnnotation:
    """Where a node sits inside a generated artifact.

    gadget: which construction block produced the node.
    j:      1-based group index within the gadget (0 when not applicable).
    h:      position index; 0 for begin nodes, d+1 (or later) for end nodes.
    kind:   role of the node (begin/end marker, bit node, separator, ...).
    """

    gadget: str
    j: int
    h: int
    kind: str


@dataclass(frozen=True)
class LabeledGraph:
    directed: bool
    alphabet: Alphabet
    labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    annotations: dict[int, NodeAnnotation] | None = None

    def __post_init__(self):
        labels = tuple(self.labels)
        if self.directed:
            edges = tuple((int(u), int(v)) for u, v in self.edges)
        else:
            edges = tuple(
                (int(u), int(v)) if u <= v else (int(v), int(u))
                for u, v in self.edges
            )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "edges", edges)
        if self.annotations is not None:
            object.__setattr__(self, "annotations", dict(self.annotations))

    @property
    def n(self) -> int:
        return len(self.labels)

    def out_neighbors(self) -> list[list[int]]:
        """Adjacency honoring direction semantics (symmetric if undirected)."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            if not self.directed and u != v:
                adj[v].append(u)
        return adj

    def undirected_neighbors(self) -> list[list[int]]:
        """Adjacency ignoring edge orientation."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            if u != v:
                adj[v].append(u)
        return adj


@dataclass(frozen=True)
class DegreeStats:
    node_count: int
    edge_count: int
    max_undirected_degree: int
    max_in_plus_out: int
    is_simple_path: bool


def validate_graph(g: LabeledGraph) -> list[str]:
    """Collect every structural invariant violation (empty when valid)."""
    violations: list[str] = []
    for i, label in enumerate(g.labels):
        if not label:
            violations.append(f"empty label at node {i}")
            continue
        bad = g.alphabet.check_word(label)
        if bad is not None:
            violations.append(
                f"symbol {bad!r} at node {i} not in alphabet {g.alphabet.name}"
            )
    seen: set[tuple[int, int]] = set()
    for u, v in g.edges:
        if not (0 <= u < g.n and 0 <= v < g.n):
            violations.append(f"edge endpoint out of range: ({u}, {v})")
            continue
        if (u, v) in seen:
            violations.append(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
    if g.annotations:
        for i, ann in g.annotations.items():
            if not (0 <= i < g.n):
                violations.append(f"annotation for unknown node {i}")
            if ann.gadget not in GADGET_TAGS:
                violations.append(f"unknown gadget tag {ann.gadget!r} at node {i}")
            if ann.kind not in KIND_TAGS:
                violations.append(f"unknown kind tag {ann.kind!r} at node {i}")
    return violations


def is_deterministic(g: LabeledGraph) -> bool:
    """True iff all out-neighbors of any node start with distinct symbols."""
    if not g.directed:
        raise ValueError("is_deterministic requires a directed graph")
    outs: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        outs[u].add(v)
    for succ in outs:
        firsts = {g.labels[v][0] for v in succ}
        if len(firsts) < len(succ):
            return False
    return True


def is_acyclic(g: LabeledGraph) -> bool:
    """Topological check (Kahn) for directed graphs."""
    if not g.directed:
        raise ValueError("is_acyclic requires a directed graph")
    indeg = [0] * g.n
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        indeg[v] += 1
    queue = deque(v for v in range(g.n) if indeg[v] == 0)
    removed = 0
    while queue:
        u = queue.popleft()
        removed += 1
        for v in adj[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return removed == g.n


def _connected_undirected(g: LabeledGraph) -> bool:
    if g.n == 0:
        return False
    adj = g.undirected_neighbors()
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


def degree_stats(g: LabeledGraph) -> DegreeStats:
    und = [0] * g.n
    indeg = [0] * g.n
    outdeg = [0] * g.n
    for u, v in g.edges:
        und[u] += 1
        und[v] += 1
        outdeg[u] += 1
        indeg[v] += 1
    max_und = max(und, default=0)
    if g.directed:
        max_io = max((indeg[v] + outdeg[v] for v in range(g.n)), default=0)
    else:
        max_io = max_und
    # A connected tree with exactly two leaves is a path; one isolated node
    # counts as the degenerate path.
    leaves = sum(1 for d in und if d == 1)
    simple_path = (
        g.n >= 1
        and len(g.edges) == g.n - 1
        and _connected_undirected(g)
        and (leaves == 2 or (g.n == 1 and len(g.edges) == 0))
    )
    return DegreeStats(
        node_count=g.n,
        edge_count=len(g.edges),
        max_undirected_degree=max_und,
        max_in_plus_out=max_io,
        is_simple_path=simple_path,
    )


def expand_labels(g: LabeledGraph) -> tuple[LabeledGraph, list[tuple[int, ...]]]:
    """Split every multi-symbol label into a chain of single-symbol nodes.

    Each node with a label of length k becomes a chain of k nodes spelling the
    label; edges into the node attach to the chain head and edges out of it
    leave from the chain tail (both attachments for undirected edges).
    Returns the expanded graph and, per original node, the tuple of chain node
    ids in spelling order.
    """
    new_labels: list[str] = []
    node_map: list[tuple[int, ...]] = []
    for label in g.labels:
        start = len(new_labels)
        new_labels.extend(label)
        node_map.append(tuple(range(start, start + len(label))))

    def head(i: int) -> int:
        return node_map[i][0]

    def tail(i: int) -> int:
        return node_map[i][-1]

    new_edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()

    def add(u: int, v: int) -> None:
        key = (u, v) if g.directed or u <= v else (v, u)
        if key not in seen:
            seen.add(key)
            new_edges.append(key)

    for chain in node_map:
        for a, b in zip(chain, chain[1:]):
            add(a, b)
    for u, v in g.edges:
        add(tail(u), head(v))
        if not g.directed:
            add(tail(v), head(u))

    annotations = None
    if g.annotations is not None:
        annotations = {
            c: ann for i, ann in g.annotations.items() for c in node_map[i]
        }
    g2 = LabeledGraph(
        directed=g.directed,
        alphabet=g.alphabet,
        labels=tuple(new_labels),
        edges=tuple(new_edges),
        annotations=annotations,
    )
    return g2, node_map
