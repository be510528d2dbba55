import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_acyclic, brute_deterministic, brute_simple_path
from pmlg import (
    BASE4,
    BINARY,
    LabeledGraph,
    NodeAnnotation,
    Pattern,
    assemble_zigzag,
    build_deterministic_dag,
    degree_stats,
    encode_binary,
    expand_labels,
    gen_ov_instance,
    is_acyclic,
    is_deterministic,
    match_exists,
    oracle_match_exists,
    orient_to_dag,
    assemble_undirected,
    OvInstance,
    validate_graph,
)


def g4(directed, labels, edges, ann=None):
    return LabeledGraph(directed, BASE4, tuple(labels), tuple(edges), ann)


class TestValidate:
    def test_minimal_valid(self):
        assert validate_graph(g4(False, ["b"], [])) == []

    def test_empty_label(self):
        violations = validate_graph(g4(False, [""], []))
        assert violations == ["empty label at node 0"]

    def test_duplicate_edge(self):
        violations = validate_graph(g4(False, ["b", "e"], [(0, 1), (0, 1)]))
        assert len(violations) == 1
        assert "duplicate edge" in violations[0]

    def test_duplicate_detected_after_canonicalization(self):
        violations = validate_graph(g4(False, ["b", "e"], [(0, 1), (1, 0)]))
        assert len(violations) == 1

    def test_out_of_range(self):
        violations = validate_graph(g4(True, ["b"], [(0, 99)]))
        assert violations and "out of range" in violations[0]

    def test_foreign_symbol(self):
        violations = validate_graph(g4(True, ["bq"], []))
        assert violations and "'q'" in violations[0]

    def test_self_loop_allowed(self):
        assert validate_graph(g4(True, ["b"], [(0, 0)])) == []

    def test_bad_annotation(self):
        ann = {0: NodeAnnotation("nope", 1, 1, "B")}
        violations = validate_graph(g4(True, ["b"], [], ann))
        assert violations and "gadget" in violations[0]


class TestDeterministic:
    def test_distinct_first_symbols(self):
        g = g4(True, ["b", "0", "1"], [(0, 1), (0, 2)])
        assert is_deterministic(g)

    def test_equal_first_symbols(self):
        g = g4(True, ["e", "b0", "b1"], [(0, 1), (0, 2)])
        assert not is_deterministic(g)

    def test_deterministic_dag_output(self):
        art = build_deterministic_dag(OvInstance(((0, 0),), ((1, 0),)))
        assert is_deterministic(art.graph)

    def test_rejects_undirected(self):
        with pytest.raises(ValueError):
            is_deterministic(g4(False, ["b"], []))


class TestAcyclic:
    def test_chain(self):
        assert is_acyclic(g4(True, ["b", "e", "0"], [(0, 1), (1, 2)]))

    def test_two_cycle(self):
        assert not is_acyclic(g4(True, ["b", "e"], [(0, 1), (1, 0)]))

    def test_oriented_artifact(self):
        art = orient_to_dag(assemble_undirected(OvInstance(((1, 0),), ((0, 1),))))
        assert is_acyclic(art.graph)

    def test_rejects_undirected(self):
        with pytest.raises(ValueError):
            is_acyclic(g4(False, ["b"], []))


def _all_small_directed_graphs(n, symbols):
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for labeling in product(symbols, repeat=n):
        for mask in range(2 ** len(pairs)):
            edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
            yield LabeledGraph(True, BINARY, labeling, edges)


class TestBruteForceAgreement:
    def test_exhaustive_small(self):
        for n in (1, 2, 3):
            for g in _all_small_directed_graphs(n, BINARY.symbols):
                assert is_deterministic(g) == brute_deterministic(g)
                assert is_acyclic(g) == brute_acyclic(g)

    def test_random_medium(self):
        rng = random.Random(42)
        for _ in range(400):
            n = rng.randint(4, 5)
            labels = tuple(rng.choice(BASE4.symbols) for _ in range(n))
            edges = tuple(
                (u, v)
                for u in range(n)
                for v in range(n)
                if u != v and rng.random() < 0.35
            )
            g = LabeledGraph(True, BASE4, labels, edges)
            assert is_deterministic(g) == brute_deterministic(g)
            assert is_acyclic(g) == brute_acyclic(g)


class TestDegreeStats:
    def test_path_of_three(self):
        stats = degree_stats(g4(False, ["b", "0", "e"], [(0, 1), (1, 2)]))
        assert stats.max_undirected_degree == 2
        assert stats.is_simple_path
        assert stats.node_count == 3 and stats.edge_count == 2

    def test_single_node(self):
        assert degree_stats(g4(False, ["b"], [])).is_simple_path

    def test_zigzag_artifact_is_path(self):
        art = assemble_zigzag(gen_ov_instance(2, 2, 3, "random"))
        stats = degree_stats(art.graph)
        assert stats.is_simple_path and stats.max_undirected_degree == 2

    def test_encoded_det_dag_degree(self):
        art = encode_binary(build_deterministic_dag(gen_ov_instance(2, 2, 9, "no-orthogonal")))
        assert degree_stats(art.graph).max_in_plus_out <= 3

    def test_simple_path_characterization_random(self):
        rng = random.Random(11)
        for _ in range(500):
            n = rng.randint(1, 6)
            edges = []
            seen = set()
            for _ in range(rng.randint(0, n + 2)):
                u, v = rng.randrange(n), rng.randrange(n)
                if u == v:
                    continue
                key = (min(u, v), max(u, v))
                if key not in seen:
                    seen.add(key)
                    edges.append(key)
            g = LabeledGraph(False, BINARY, tuple("0" * n), tuple(edges))
            assert degree_stats(g).is_simple_path == brute_simple_path(g)

    def test_undirected_max_io_equals_degree(self):
        g = g4(False, ["b", "0", "e"], [(0, 1), (1, 2), (0, 2)])
        stats = degree_stats(g)
        assert stats.max_in_plus_out == stats.max_undirected_degree


class TestExpandLabels:
    def test_two_node_chain(self):
        g = g4(True, ["eb", "0"], [(0, 1)])
        g2, node_map = expand_labels(g)
        assert g2.labels == ("e", "b", "0")
        assert g2.edges == ((0, 1), (1, 2))
        assert node_map == [(0, 1), (2,)]

    def test_identity_on_single_symbols(self):
        g = g4(False, ["b", "e"], [(0, 1)])
        g2, node_map = expand_labels(g)
        assert g2.labels == g.labels and g2.edges == g.edges
        assert node_map == [(0,), (1,)]

    def test_edge_count_rule(self):
        g = LabeledGraph(True, BINARY, ("10", "0000"), ((0, 1),))
        g2, _ = expand_labels(g)
        assert len(g2.edges) == 1 + (2 - 1) + (4 - 1)

    def test_undirected_attaches_both_ways(self):
        g = g4(False, ["eb", "0e"], [(0, 1)])
        g2, node_map = expand_labels(g)
        # tail(u)-head(v) and tail(v)-head(u)
        assert (node_map[0][-1], node_map[1][0]) in g2.edges
        assert (node_map[1][-1], node_map[0][0]) in [
            (u, v) if u <= v else (v, u) for (u, v) in g2.edges
        ] or (node_map[0][0], node_map[1][-1]) in g2.edges

    def test_annotations_copied_to_chain(self):
        ann = {0: NodeAnnotation("GW", 1, 1, "zero-node")}
        g = g4(True, ["eb"], [], ann)
        g2, node_map = expand_labels(g)
        assert all(g2.annotations[c] == ann[0] for c in node_map[0])

    def test_match_preserved_seeded(self):
        rng = random.Random(99)
        for _ in range(400):
            n = rng.randint(1, 4)
            labels = tuple(
                "".join(rng.choice(BASE4.symbols) for _ in range(rng.randint(1, 3)))
                for _ in range(n)
            )
            directed = rng.random() < 0.5
            edges = []
            seen = set()
            for _ in range(rng.randint(0, 5)):
                u, v = rng.randrange(n), rng.randrange(n)
                key = (u, v) if directed or u <= v else (v, u)
                if key not in seen:
                    seen.add(key)
                    edges.append(key)
            g = LabeledGraph(directed, BASE4, labels, tuple(edges))
            g2, _ = expand_labels(g)
            p = Pattern(
                "".join(rng.choice(BASE4.symbols) for _ in range(rng.randint(1, 6))),
                BASE4,
            )
            engine_on_original = match_exists(g, p)
            assert engine_on_original == match_exists(g2, p)
            # the oracle is independent of both the engine and the expansion
            assert engine_on_original == oracle_match_exists(g2, p)


@st.composite
def tiny_graphs(draw):
    n = draw(st.integers(1, 4))
    labels = tuple(
        draw(st.text(alphabet=list(BASE4.symbols), min_size=1, max_size=3))
        for _ in range(n)
    )
    directed = draw(st.booleans())
    pairs = [(u, v) for u in range(n) for v in range(n)]
    edges = tuple(draw(st.lists(st.sampled_from(pairs), max_size=6, unique=True)))
    return LabeledGraph(directed, BASE4, labels, edges)


@given(tiny_graphs())
@settings(max_examples=150, deadline=None)
def test_expand_labels_idempotent(g):
    g2, _ = expand_labels(g)
    g3, node_map = expand_labels(g2)
    assert g3.labels == g2.labels
    assert set(g3.edges) == set(g2.edges)
    assert all(chain == (i,) for i, chain in enumerate(node_map))
