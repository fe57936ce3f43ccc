from fractions import Fraction

import pytest

import bdg


def entry_graph(name):
    entry = bdg.corpus_entry(name)
    graph, c = bdg.parse_graph_text(entry["graph_text"], name)
    assert c is not None
    return graph, c


def marked_subgraph_removed(graph, c):
    d = bdg.Graph()
    for v in graph.vertex_ids():
        if v != c:
            d.add_vertex(v, graph.weight(v))
    for a, b in graph.edge_list():
        if a != c and b != c:
            d.add_edge(a, b)
    return d


def test_parse_emit_round_trip():
    graph, c = entry_graph("ex521")
    text = bdg.emit_graph_text(graph, c)
    again, c2 = bdg.parse_graph_text(text)
    assert again == graph
    assert c2 == c


def test_determinant_and_classification():
    graph, c = entry_graph("ex521")
    d = marked_subgraph_removed(graph, c)
    assert bdg.determinant_d(d) == 21
    assert bdg.is_negative_definite(d)
    kc = bdg.classify_k(graph, c)
    assert kc["class"] == "ample"
    assert kc["c_pairing"] == Fraction(8, 7)


def test_d_sharp_exact():
    graph, c = entry_graph("ex521")
    d = marked_subgraph_removed(graph, c)
    adjacency = {v for v in graph.neighbors(c)}
    ds = bdg.d_sharp(d, adjacency)
    assert ds["alpha"]["D1"] == Fraction(20, 7)
    assert ds["alpha"]["D16"] == Fraction(8, 7)
    assert ds["c_pairing"] == Fraction(8, 7)
    assert not ds["integral"]


def test_reduce_reaches_known_boundary():
    graph, c = entry_graph("ex521")
    trace = bdg.reduce_to_trivial(graph, c)
    assert [s["contracted"] for s in trace["steps"]] == ["C", "D16", "D15", "D14", "D13"]
    target, target_c = entry_graph("ex511_m3")
    assert bdg.canonical_form(trace["final_graph"], trace["final_c"]) == bdg.canonical_form(
        target, target_c
    )


def test_build_z_has_pa_one():
    graph, c = entry_graph("ex522")
    z = bdg.build_z(graph, c)
    assert z["D1"] == 2
    assert bdg.pa_genus(graph, z) == 1


def test_rationality_and_max_pa():
    graph, c = entry_graph("ex61")
    d = marked_subgraph_removed(graph, c)
    report = bdg.is_rational(d)
    assert report["rational"]
    mp = bdg.max_pa_bounded(d, 6)
    assert mp["max"] == 0
    assert set(mp["witness"].values()) == {1}


def test_construct_and_enumerate():
    b = bdg.apply_moves(2, [("on", "F"), ("edge", "E1", "F"), ("on", "E2")])
    assert b["c"] == "E3"
    rows = bdg.enumerate_boundaries(m_min=2, m_max=2, depth=3, negdef=True)
    assert rows
    assert all(row["class"] is not None for row in rows)


def test_errors_are_typed():
    with pytest.raises(bdg.InputError):
        bdg.parse_graph_text("v A -2\ne A B\n")
    with pytest.raises(bdg.InputError):
        bdg.corpus_entry("missing")


def test_verify_paper_all_pass():
    results = bdg.verify_paper()
    assert len(results) == 16
    failures = [r for r in results if not r["pass"]]
    assert failures == []
