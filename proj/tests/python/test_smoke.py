import pytest

import commgraph


def test_cycles_round_trip():
    images = commgraph.parse_cycles("(1,2,3)(4,5)", 5)
    assert images == [1, 2, 0, 4, 3]
    assert commgraph.format_cycles(images) == "(1,2,3)(4,5)"
    with pytest.raises(ValueError):
        commgraph.parse_cycles("(1,1)", 3)


def test_alt5():
    g = commgraph.CommutingGraph("alt(5)")
    assert g.order == 60
    assert g.vertex_count == 31
    assert g.component_count == 21
    assert set(g.component_diameters()) == {1}
    assert g.bijection()
    assert g.prime_graph()["components"] == [[2], [3], [5]]


def test_distances():
    s4 = commgraph.CommutingGraph("sym(4)")
    assert s4.distance("(1,2)", "(3,4)") == 1
    assert commgraph.CommutingGraph("sym(3)").distance("(1,2)", "(1,2,3)") is None
    with pytest.raises(ValueError):
        commgraph.CommutingGraph("alt(5)").distance("(1,2)", "(1,2,3)")


def test_engines_agree():
    g = commgraph.CommutingGraph("alt(6)")
    assert g.component_diameters("full") == g.component_diameters("reduced")
    assert max(g.component_diameters()) == 6


def test_report():
    r = commgraph.analyze("sym(6)")
    assert r["order"] == 720
    assert max(c["diameter"] for c in r["components"]) == 4
    assert r["bijection"] == "PASS"
    assert all(v["status"] != "FAIL" for v in r["lemmas"])
    assert sum(c["elements"] for c in r["components"]) == 720 - r["centre_size"]


def test_table():
    rows = commgraph.table()
    assert len(rows) == 9
    assert all(expected == actual for _, expected, actual in rows)


def test_catalog_errors():
    assert commgraph.group_order("m12") == 95040
    with pytest.raises(commgraph.CatalogError):
        commgraph.CommutingGraph("sym(12)")
