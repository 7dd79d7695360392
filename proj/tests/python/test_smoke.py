"""Smoke tests for the mtw extension module."""

import pytest

import mtw


@pytest.fixture()
def star3():
    return mtw.MetricTree([("c", "u", "1"), ("c", "v", "2"), ("c", "w", "3")])


def tips(t):
    return [t.vertex("u"), t.vertex("v"), t.vertex("w")]


def test_tree_geometry(star3):
    t = star3
    assert t.vertex_count == 4
    assert t.edge_count == 3
    assert t.distance(t.vertex("u"), t.vertex("w")) == "4"
    assert t.distance(t.vertex("v"), t.vertex("w")) == "5"
    mid = t.edge_point("u", "c", "1/2")
    assert t.point_key(mid) == "E c u 1/2"
    assert t.is_between(t.vertex("u"), t.vertex("c"), t.vertex("v"))
    assert not t.is_between(t.vertex("u"), t.vertex("w"), t.vertex("v"))
    med = t.median(t.vertex("u"), t.vertex("v"), t.vertex("w"))
    assert t.point_key(med) == "V c"


def test_hull_and_dimension(star3):
    t = star3
    h = t.hull(tips(t))
    assert h.dimension() == 3
    assert [t.point_key(p) for p in h.final_points()] == ["V u", "V v", "V w"]
    assert h.deviation([t.vertex("u")]) == "0"
    proj = t.hull([t.vertex("u"), t.vertex("v")]).project(t.vertex("w"))
    assert t.point_key(proj) == "V c"


def test_widths(star3):
    t = star3
    a = tips(t)
    w = mtw.tn_width(t, a, n=2)
    assert w["hi"] == "1"
    assert w["witness_dimension"] <= 2
    assert mtw.tn_width(t, a, n=1)["hi"] == "5/2"
    r, center = mtw.chebyshev_radius(t, a)
    assert r == "5/2"
    assert t.point_key(center) == "E c w 1/2"
    seq = mtw.width_sequence(t, a, n_max=4)
    assert [s["value"] for s in seq] == ["5/2", "1", "0", "0"]
    assert seq[3]["star_convention"]
    assert mtw.min_leaves_cover(t, a, "1") == 2
    bf_value, _ = mtw.brute_force_tn_width(t, a, n=2, resolution="1/4")
    assert bf_value == "1"
    cw = mtw.compact_width(t, a)
    assert cw["value"] == "0" and cw["attained"]


def test_errors(star3):
    with pytest.raises(ValueError):
        mtw.MetricTree([("a", "b", "1"), ("b", "a", "1")])
    with pytest.raises(ValueError):
        star3.vertex("nope")
    with pytest.raises(ValueError):
        mtw.tn_width(star3, [], n=1)


def test_radial():
    assert mtw.ball_width("1", n=5) == "1"
    assert mtw.ball_width("5/2", n=1) == "5/2"
    exact, approx = mtw.radial_distance(["1", "0"], ["0", "1"])
    assert exact == "2" and abs(approx - 2) < 1e-12
    assert mtw.radial_is_between(["1", "0"], ["0", "0"], ["0", "1"])
    witness = mtw.ball_width_lower_bound_witness("1", [["1", "0"], ["0", "1"]], "1/4")
    assert len(witness) == 2


def test_p1_and_suites():
    t = mtw.parse_newick("(u:2)v;")
    w = mtw.p1_witness(t, t.vertex("u"), t.vertex("v"), "1/2", "1")
    assert w["delta"] == "1/4"
    assert w["z"] == "E u v 1/4"
    rep = mtw.p1_check(t, t.vertex("u"), t.vertex("v"), "1/2", "1", "1/8", samples=200)
    assert rep["pass"]
    suite = mtw.run_suite("axioms", trials=3, seed=1)
    assert suite["pass"]
    assert "noninc" in mtw.suite_names()


def test_io_round_trip(star3):
    text = star3.to_tsv()
    back = mtw.parse_tree_tsv(text)
    assert back.to_tsv() == text
    nwk = mtw.parse_newick("(u:1,v:2,w:3)c;")
    assert nwk.distance(nwk.vertex("u"), nwk.vertex("w")) == "4"
    g = mtw.generate_random_tree(10, seed=7)
    assert g.vertex_count == 10 and g.edge_count == 9
