"""Shared test helpers: independent re-implementations used as oracles, a
walk enumerator for witness-level checks, and random generators."""

from __future__ import annotations

import random
from itertools import combinations, product

from pmlg import (
    BASE4,
    BINARY,
    LabeledGraph,
    MatchOccurrence,
    OvInstance,
    Pattern,
)


def respell_occurrence(g: LabeledGraph, occ: MatchOccurrence, p: Pattern) -> bool:
    """Check edge validity and exact spelling of a reported occurrence,
    without using any engine code."""
    w = occ.witness
    if g.directed:
        edge_set = set(g.edges)
    else:
        edge_set = {(min(u, v), max(u, v)) for u, v in g.edges}
    for a, b in zip(w, w[1:]):
        key = (a, b) if g.directed else (min(a, b), max(a, b))
        if key not in edge_set:
            return False
    if len(w) == 1:
        spelled = g.labels[w[0]][occ.start_offset - 1 : occ.end_offset]
    else:
        spelled = (
            g.labels[w[0]][occ.start_offset - 1 :]
            + "".join(g.labels[u] for u in w[1:-1])
            + g.labels[w[-1]][: occ.end_offset]
        )
    return spelled == p.symbols


def enumerate_walk_matches(
    g: LabeledGraph,
    p: Pattern,
    start: int | None = None,
    end: int | None = None,
    limit: int = 50,
) -> list[tuple[int, ...]]:
    """DFS enumeration of walks spelling p (single-symbol labels only),
    optionally anchored at fixed start/end nodes."""
    assert all(len(label) == 1 for label in g.labels)
    adj = g.out_neighbors()
    results: list[tuple[int, ...]] = []

    def dfs(v: int, k: int, path: list[int]) -> None:
        if len(results) >= limit or g.labels[v] != p.symbols[k]:
            return
        path.append(v)
        if k == p.m - 1:
            if end is None or v == end:
                results.append(tuple(path))
        else:
            for w in adj[v]:
                dfs(w, k + 1, path)
        path.pop()

    for s in [start] if start is not None else range(g.n):
        dfs(s, 0, [])
    return results


def brute_deterministic(g: LabeledGraph) -> bool:
    outs: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        outs[u].add(v)
    for succ in outs:
        for a, b in combinations(sorted(succ), 2):
            if g.labels[a][0] == g.labels[b][0]:
                return False
    return True


def brute_acyclic(g: LabeledGraph) -> bool:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
    color = [0] * g.n  # 0 unvisited, 1 on stack, 2 done

    def dfs(v: int) -> bool:
        color[v] = 1
        for w in adj[v]:
            if color[w] == 1:
                return False
            if color[w] == 0 and not dfs(w):
                return False
        color[v] = 2
        return True

    return all(color[v] != 0 or dfs(v) for v in range(g.n))


def brute_simple_path(g: LabeledGraph) -> bool:
    """Try to order the nodes into a path; independent of degree_stats."""
    if g.n == 0:
        return False
    adj = {v: set() for v in range(g.n)}
    for u, v in g.edges:
        if u == v:
            return False
        if v in adj[u]:
            return False
        adj[u].add(v)
        adj[v].add(u)
    if g.n == 1:
        return len(g.edges) == 0
    ends = [v for v in range(g.n) if len(adj[v]) == 1]
    if len(ends) != 2:
        return False
    seen = {ends[0]}
    cur = ends[0]
    while True:
        nxt = [w for w in adj[cur] if w not in seen]
        if not nxt:
            break
        if len(nxt) > 1:
            return False
        cur = nxt[0]
        seen.add(cur)
    return len(seen) == g.n and cur == ends[1]


def independent_ov_answer(inst: OvInstance) -> tuple[int, int] | None:
    """Doubly nested loop re-implementation, structured differently from the
    library solver."""
    hits = [
        (i + 1, j + 1)
        for i, j in product(range(inst.n), range(inst.n))
        if not any(a and b for a, b in zip(inst.X[i], inst.Y[j]))
    ]
    return min(hits) if hits else None


def random_instance(rng: random.Random, max_n: int = 5, max_d: int = 4) -> OvInstance:
    n = rng.randint(1, max_n)
    d = rng.randint(1, max_d)
    X = tuple(tuple(rng.randrange(2) for _ in range(d)) for _ in range(n))
    Y = tuple(tuple(rng.randrange(2) for _ in range(d)) for _ in range(n))
    return OvInstance(X, Y)


def all_instances(max_n: int, max_d: int):
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            vecs = list(product((0, 1), repeat=d))
            for X in product(vecs, repeat=n):
                for Y in product(vecs, repeat=n):
                    yield OvInstance(X, Y)


def random_graph_and_pattern(
    rng: random.Random, max_nodes: int = 6, max_m: int = 7
) -> tuple[LabeledGraph, Pattern]:
    """Small single-symbol-label graph plus a pattern, within oracle budget."""
    alphabet = BINARY if rng.random() < 0.5 else BASE4
    n = rng.randint(1, max_nodes)
    labels = tuple(rng.choice(alphabet.symbols) for _ in range(n))
    directed = rng.random() < 0.5
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for _ in range(rng.randint(0, 2 * n)):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v and rng.random() < 0.8:
            continue  # keep self-loops rare
        key = (u, v) if directed or u <= v else (v, u)
        if key not in seen:
            seen.add(key)
            edges.append(key)
    g = LabeledGraph(directed, alphabet, labels, tuple(edges))
    m = rng.randint(1, max_m)
    # Bias pattern symbols toward labels present in the graph.
    pool = list(labels) + list(alphabet.symbols)
    p = Pattern("".join(rng.choice(pool) for _ in range(m)), alphabet)
    return g, p
