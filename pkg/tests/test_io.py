import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pmlg import (
    BASE4,
    BINARY,
    FormatError,
    LabeledGraph,
    NodeAnnotation,
    Pattern,
    assemble_undirected,
    build_deterministic_dag,
    gen_ov_instance,
    read_graph,
    read_ov,
    read_pattern,
    write_graph,
    write_ov,
    write_pattern,
)

GOLDEN_SINGLE_NODE = b"pmlg 1\nalphabet base4\ndirected false\nnodes 1\n0 b\nedges 0\n"


def test_single_node_document():
    g = LabeledGraph(False, BASE4, ("b",), ())
    assert write_graph(g) == GOLDEN_SINGLE_NODE
    assert read_graph(GOLDEN_SINGLE_NODE) == g


def test_round_trip_artifact():
    art = assemble_undirected(gen_ov_instance(2, 2, 1, "random"))
    data = write_graph(art.graph)
    g2 = read_graph(data)
    assert g2 == art.graph
    assert write_graph(g2) == data


def test_round_trip_directed_with_annotations():
    art = build_deterministic_dag(gen_ov_instance(2, 2, 4, "no-orthogonal"))
    data = write_graph(art.graph)
    assert read_graph(data) == art.graph


def test_comments_and_blanks_ignored():
    doc = b"# header comment\npmlg 1\n\nalphabet base4\ndirected false\nnodes 1\n0 b\n# mid comment\nedges 0\n"
    assert read_graph(doc) == LabeledGraph(False, BASE4, ("b",), ())


def test_edge_out_of_range_reports_line():
    doc = "pmlg 1\nalphabet base4\ndirected false\nnodes 2\n0 b\n1 e\nedges 1\n0 99\n"
    with pytest.raises(FormatError) as err:
        read_graph(doc)
    assert "out of range" in str(err.value)
    assert "line 8" in str(err.value)


def test_malformed_header():
    with pytest.raises(FormatError) as err:
        read_graph("pmlgg 2\n")
    assert "header" in str(err.value)


def test_unknown_symbol_in_label():
    doc = "pmlg 1\nalphabet binary\ndirected false\nnodes 1\n0 z\nedges 0\n"
    with pytest.raises(FormatError) as err:
        read_graph(doc)
    assert "'z'" in str(err.value) and "line 5" in str(err.value)

def test_node_id_out_of_order():
    doc = "pmlg 1\nalphabet binary\ndirected false\nnodes 2\n1 0\n0 0\nedges 0\n"
    with pytest.raises(FormatError) as err:
        read_graph(doc)
    assert "out of order" in str(err.value)


def test_truncated_document():
    with pytest.raises(FormatError) as err:
        read_graph("pmlg 1\nalphabet binary\n")
    assert "end of document" in str(err.value)


def test_bad_annotation_line():
    doc = (
        "pmlg 1\nalphabet base4\ndirected false\nnodes 1\n0 b\nedges 0\n"
        "annotations\n0 NOPE 1 1 B\n"
    )
    with pytest.raises(FormatError) as err:
        read_graph(doc)
    assert "gadget" in str(err.value)


def test_pattern_round_trip():
    p = Pattern("bb100eb101ee", BASE4)
    data = write_pattern(p)
    assert data == b"pmlgpat 1\nalphabet base4\nbb100eb101ee\n"
    assert read_pattern(data) == p


def test_pattern_bad_symbol():
    with pytest.raises(FormatError):
        read_pattern("pmlgpat 1\nalphabet binary\n01b\n")


def test_ov_round_trip():
    inst = gen_ov_instance(3, 4, 7, "planted-orthogonal")
    assert read_ov(write_ov(inst)) == inst


def test_ov_bad_rows():
    with pytest.raises(FormatError):
        read_ov("ov 1\n2 2\n0 1\n1 1\n0 0\n")  # one row short
    with pytest.raises(FormatError):
        read_ov("ov 1\n1 2\n0 2\n1 1\n")  # entry not a bit


@st.composite
def arbitrary_graphs(draw):
    alphabet = draw(st.sampled_from([BASE4, BINARY]))
    n = draw(st.integers(1, 5))
    labels = tuple(
        draw(st.text(alphabet=list(alphabet.symbols), min_size=1, max_size=3))
        for _ in range(n)
    )
    directed = draw(st.booleans())
    pairs = [(u, v) for u in range(n) for v in range(n)]
    edges = tuple(draw(st.lists(st.sampled_from(pairs), max_size=7, unique=True)))
    ann = None
    if draw(st.booleans()):
        ann = {
            0: NodeAnnotation(
                draw(st.sampled_from(["GW", "GU1", "pendant"])),
                draw(st.integers(0, 3)),
                draw(st.integers(0, 3)),
                draw(st.sampled_from(["B", "E", "zero-node"])),
            )
        }
    return LabeledGraph(directed, alphabet, labels, edges, ann)


@given(arbitrary_graphs())
@settings(max_examples=200, deadline=None)
def test_write_read_write_identity(g):
    data = write_graph(g)
    g2 = read_graph(data)
    assert g2 == g
    assert write_graph(g2) == data
