import pytest

import commgraph


def test_group_info():
    info = commgraph.group_info({"sym": 4})
    assert info["order"] == 24
    assert info["derived_orders"] == [24, 12, 4, 1]
    assert info["solvable"] and not info["metabelian"]
    assert commgraph.group_info('{"p2q": 5}')["metabelian"]


def test_subgroups():
    subs = commgraph.subgroups({"sym": 4})
    assert len(subs) == 30
    assert subs[0]["order"] == 1 and subs[-1]["order"] == 24


def test_graph_and_analysis():
    g = commgraph.graph({"cyclic": 6}, 2)
    assert len(g["vertices"]) == 4
    assert g["edges"] == [[0, 1, 0, 1], [2, 3, 0, 1]]
    a = commgraph.analyze({"sym": 4}, 3, kind="cont")
    assert a["connected_diameter"] == 4
    stars = [c for c in commgraph.analyze({"p2q": 5}, 5)["components"] if c["class"] == "star"]
    assert len(stars) == 12


def test_dot():
    text = commgraph.dot({"cyclic": 6}, 2)
    assert text.startswith("graph G {\n")
    assert text.count(" -- ") == 2


def test_verify():
    report = commgraph.verify("sym4")
    assert report["passed"]
    assert report["records"][0]["observed"]["cd"] == 4
    assert "lemmas" in commgraph.suite_names()


def test_errors():
    with pytest.raises(commgraph.SpecSyntaxError):
        commgraph.group_info('{"sym":')
    with pytest.raises(commgraph.OrderCapExceeded):
        commgraph.group_info({"sym": 8})
    with pytest.raises(commgraph.CommgraphError):
        commgraph.group_info({"p2q": 6})
    with pytest.raises(commgraph.LatticeCapExceeded):
        commgraph.subgroups({"sym": 4}, lattice_cap=10)
