"""Exact walk-matching engine plus an independent exhaustive oracle.

A pattern occurs in a graph when some walk (nodes may repeat; undirected
edges are traversable both ways) spells it, entering the first node's label
at an offset l and leaving the last node's label early at offset l'.
Multi-symbol labels are handled by expanding them into single-symbol chains
first; the engine then sweeps the pattern once, maintaining the set of nodes
reachable at each position.  The sweep costs O(N + m * |E'|) where N is the
total label length and E' the arcs of the expanded graph.

`oracle_match_exists` answers the same question by exhaustive reachability
over (node, position) states in plain Python; it shares no traversal code
with the engine and exists to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .alphabets import Alphabet
from .errors import AlphabetMismatchError, OracleBudgetError
from .graph import LabeledGraph, expand_labels

_ORACLE_STATE_BUDGET = 1_000_000


@dataclass(frozen=True)
class Pattern:
    symbols: str
    alphabet: Alphabet

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("pattern must be nonempty")
        bad = self.alphabet.check_word(self.symbols)
        if bad is not None:
            raise ValueError(f"symbol {bad!r} not in alphabet {self.alphabet.name}")

    @property
    def m(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class MatchOccurrence:
    """One match anchor: where the walk enters and leaves the pattern.

    Offsets are 1-based positions inside the start/end node labels.  The
    witness walk spells the pattern exactly:
    label(u1)[l:] + label(u2) + ... + label(uk)[:l'].
    """

    start: int
    start_offset: int
    end: int
    end_offset: int
    witness: tuple[int, ...]


def _check_alphabets(g: LabeledGraph, p: Pattern) -> None:
    if g.alphabet.name != p.alphabet.name:
        raise AlphabetMismatchError(
            f"graph uses alphabet {g.alphabet.name}, pattern uses {p.alphabet.name}"
        )


def _expanded_view(g: LabeledGraph):
    """Graph with single-symbol labels + arrays mapping back to original ids."""
    if all(len(label) == 1 for label in g.labels):
        orig = np.arange(g.n, dtype=np.int64)
        off = np.ones(g.n, dtype=np.int64)
        return g, orig, off
    g2, node_map = expand_labels(g)
    orig = np.empty(g2.n, dtype=np.int64)
    off = np.empty(g2.n, dtype=np.int64)
    for i, chain in enumerate(node_map):
        for pos, c in enumerate(chain, start=1):
            orig[c] = i
            off[c] = pos
    return g2, orig, off


def _arc_arrays(g: LabeledGraph) -> tuple[np.ndarray, np.ndarray]:
    """Directed arc lists; undirected edges contribute both orientations."""
    if g.directed:
        pairs = g.edges
    else:
        pairs = list(g.edges) + [(v, u) for (u, v) in g.edges if u != v]
    if not pairs:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    arr = np.asarray(pairs, dtype=np.int64)
    return np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1])


class _Prep:
    """Per-graph tables for the positional sweep: label codes, per-symbol node
    masks, and arcs grouped by the label of their head."""

    def __init__(self, g: LabeledGraph):
        alphabet = g.alphabet
        self.n = g.n
        self.codes = np.fromiter(
            (alphabet.index(label) for label in g.labels), dtype=np.int64, count=g.n
        )
        self.masks = {
            c: self.codes == c for c in range(len(alphabet.symbols))
        }
        srcs, dsts = _arc_arrays(g)
        self.arcs_by_head: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        if srcs.size:
            order = np.argsort(self.codes[dsts], kind="stable")
            srcs, dsts = srcs[order], dsts[order]
            head_codes = self.codes[dsts]
            for c in range(len(alphabet.symbols)):
                lo = np.searchsorted(head_codes, c, side="left")
                hi = np.searchsorted(head_codes, c, side="right")
                self.arcs_by_head[c] = (srcs[lo:hi], dsts[lo:hi])
        else:
            empty = np.empty(0, dtype=np.int64)
            for c in range(len(alphabet.symbols)):
                self.arcs_by_head[c] = (empty, empty)


def _sweep(prep: _Prep, codes: list[int], keep_frontiers: bool):
    """Run the positional sweep; returns the frontier list (or [last])."""
    cur = prep.masks[codes[0]].copy()
    frontiers = [cur]
    if not cur.any():
        return None
    for c in codes[1:]:
        srcs, dsts = prep.arcs_by_head[c]
        hit = dsts[cur[srcs]]
        if hit.size == 0:
            return None
        cur = np.zeros(prep.n, dtype=bool)
        cur[hit] = True
        if keep_frontiers:
            frontiers.append(cur)
        else:
            frontiers[0] = cur
    return frontiers


def match_exists(g: LabeledGraph, p: Pattern) -> bool:
    """Decide whether some walk in g spells p."""
    _check_alphabets(g, p)
    eg, _, _ = _expanded_view(g)
    if eg.n == 0:
        return False
    prep = _Prep(eg)
    codes = [eg.alphabet.index(c) for c in p.symbols]
    return _sweep(prep, codes, keep_frontiers=False) is not None


def find_matches(
    g: LabeledGraph, p: Pattern, limit: int | None = None
) -> list[MatchOccurrence]:
    """One canonical occurrence per distinct (end node, end offset).

    Witnesses are reconstructed by backtracking through the per-position
    reachable sets, preferring the smallest predecessor id.  Intended for
    small instances; the walk count is not bounded, only the anchors are.
    """
    _check_alphabets(g, p)
    eg, orig, off = _expanded_view(g)
    if eg.n == 0:
        return []
    prep = _Prep(eg)
    codes = [eg.alphabet.index(c) for c in p.symbols]
    frontiers = _sweep(prep, codes, keep_frontiers=True)
    if frontiers is None:
        return []

    preds: dict[int, list[int]] = {}
    srcs, dsts = _arc_arrays(eg)
    for u, v in zip(srcs.tolist(), dsts.tolist()):
        preds.setdefault(v, []).append(u)
    for lst in preds.values():
        lst.sort()

    frontier_sets = [frozenset(np.flatnonzero(f).tolist()) for f in frontiers]
    occurrences: list[MatchOccurrence] = []
    for end in sorted(frontier_sets[-1]):
        path = [end]
        for k in range(len(codes) - 2, -1, -1):
            here = frontier_sets[k]
            prev = next(u for u in preds[path[-1]] if u in here)
            path.append(prev)
        path.reverse()
        occurrences.append(_collapse(path, orig, off))
        if limit is not None and len(occurrences) >= limit:
            break
    return occurrences


def _collapse(path: list[int], orig: np.ndarray, off: np.ndarray) -> MatchOccurrence:
    """Fold an expanded-node walk back into original node ids + offsets."""
    witness = [int(orig[path[0]])]
    prev_node, prev_off = witness[0], int(off[path[0]])
    start_offset = prev_off
    for e in path[1:]:
        node, pos = int(orig[e]), int(off[e])
        if not (node == prev_node and pos == prev_off + 1):
            witness.append(node)
        prev_node, prev_off = node, pos
    return MatchOccurrence(
        start=witness[0],
        start_offset=start_offset,
        end=witness[-1],
        end_offset=int(off[path[-1]]),
        witness=tuple(witness),
    )


def oracle_match_exists(g: LabeledGraph, p: Pattern) -> bool:
    """Independent exhaustive check over (node, position) states.

    Requires single-symbol labels (run expand_labels first) and refuses
    inputs beyond the state budget |V| * m <= 10^6.
    """
    _check_alphabets(g, p)
    if any(len(label) != 1 for label in g.labels):
        raise ValueError("oracle requires single-symbol labels")
    m = p.m
    if g.n * m > _ORACLE_STATE_BUDGET:
        raise OracleBudgetError(f"state budget exceeded: {g.n} nodes * {m} positions")
    adj = [set(vs) for vs in g.out_neighbors()]
    # ok holds the nodes from which the pattern suffix P[k:] can be spelled.
    ok = {v for v in range(g.n) if g.labels[v] == p.symbols[m - 1]}
    for k in range(m - 2, -1, -1):
        sym = p.symbols[k]
        ok = {
            v
            for v in range(g.n)
            if g.labels[v] == sym and not adj[v].isdisjoint(ok)
        }
        if not ok:
            return False
    return bool(ok)
