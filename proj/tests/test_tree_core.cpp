#include "doctest.h"

#include "fixtures.hpp"
#include "mtw/errors.hpp"

#include <random>

using namespace mtw;

TEST_CASE("build_tree validates its input") {
    MetricTree t = star3();
    CHECK(t.vertex_count() == 4);
    CHECK(t.edge_count() == 3);
    CHECK(path2().vertex_count() == 2);

    CHECK_THROWS_WITH_AS(MetricTree({{"a", "b", Rat(1)}, {"b", "a", Rat(1)}}),
                         doctest::Contains("DuplicateEdge"), Error);
    CHECK_THROWS_WITH_AS(MetricTree({{"a", "b", Rat(0)}}),
                         doctest::Contains("NonpositiveLength"), Error);
    CHECK_THROWS_WITH_AS(MetricTree({{"a", "a", Rat(1)}}), doctest::Contains("CycleDetected"),
                         Error);
    CHECK_THROWS_WITH_AS(
        MetricTree({{"a", "b", Rat(1)}, {"b", "c", Rat(1)}, {"c", "a", Rat(1)}}),
        doctest::Contains("CycleDetected"), Error);
    CHECK_THROWS_AS(MetricTree({}), Error);
}

TEST_CASE("distances are exact path sums") {
    MetricTree t = star3();
    CHECK(t.distance(t.vertex_point("u"), t.vertex_point("w")) == Rat(4));
    CHECK(t.distance(t.vertex_point("u"), t.vertex_point("u")) == Rat(0));
    CHECK(t.distance(t.vertex_point("v"), t.vertex_point("w")) == Rat(5));

    MetricTree p = path2();
    TreePoint half = p.edge_point("u", "v", Rat(1, 2));
    CHECK(p.distance(p.vertex_point("u"), half) == Rat(1, 2));
    CHECK(p.distance(half, p.vertex_point("v")) == Rat(3, 2));

    // symmetric direction: offset measured from the named endpoint
    CHECK(p.edge_point("v", "u", Rat(3, 2)) == half);
}

TEST_CASE("points canonicalize") {
    MetricTree t = star3();
    CHECK(t.edge_point("c", "u", Rat(0)) == t.vertex_point("c"));
    CHECK(t.edge_point("c", "u", Rat(1)) == t.vertex_point("u"));
    CHECK_THROWS_AS(t.edge_point("c", "u", Rat(3, 2)), Error);
    CHECK_THROWS_AS(t.edge_point("u", "v", Rat(1, 2)), Error); // not an edge
    CHECK(t.point_key(t.edge_point("c", "w", Rat(1, 2))) == "E c w 1/2");

    // points do not cross trees
    MetricTree other = star3();
    CHECK_THROWS_AS(t.distance(t.vertex_point("u"), other.vertex_point("u")), Error);
}

TEST_CASE("segments carry the unique path") {
    MetricTree t = star3();
    MetricSegment s = t.segment(t.vertex_point("u"), t.vertex_point("v"));
    CHECK(s.length() == Rat(3));
    CHECK(s.via() == std::vector<int>{t.find_vertex("u"), t.find_vertex("c"), t.find_vertex("v")});
    CHECK(t.segment_contains(s, t.vertex_point("c")));
    CHECK(!t.segment_contains(s, t.vertex_point("w")));

    MetricSegment uw = t.segment(t.vertex_point("u"), t.vertex_point("w"));
    CHECK(t.segment_contains(uw, t.vertex_point("c")));

    MetricSegment deg = t.segment(t.vertex_point("u"), t.vertex_point("u"));
    CHECK(deg.length() == Rat(0));
    CHECK(t.segment_contains(deg, t.vertex_point("u")));
    CHECK(!t.segment_contains(deg, t.vertex_point("c")));
}

TEST_CASE("betweenness is decided exactly") {
    MetricTree t = star3();
    CHECK(t.is_between(t.vertex_point("u"), t.vertex_point("c"), t.vertex_point("v")));
    CHECK(t.is_between(t.vertex_point("u"), t.vertex_point("u"), t.vertex_point("v")));
    CHECK(!t.is_between(t.vertex_point("u"), t.vertex_point("w"), t.vertex_point("v")));
}

TEST_CASE("medians satisfy the three point property") {
    MetricTree t = star3();
    CHECK(t.median(t.vertex_point("u"), t.vertex_point("v"), t.vertex_point("w")) ==
          t.vertex_point("c"));
    CHECK(t.median(t.vertex_point("u"), t.vertex_point("u"), t.vertex_point("v")) ==
          t.vertex_point("u"));

    MetricTree p = path2();
    TreePoint mid = p.edge_point("u", "v", Rat(1));
    CHECK(p.median(p.vertex_point("u"), p.vertex_point("v"), mid) == mid);
}

TEST_CASE("median laws on random points") {
    MetricTree t = star3();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        TreePoint x = t.sample_point(rng), y = t.sample_point(rng), z = t.sample_point(rng);
        TreePoint m = t.median(x, y, z);
        CHECK(t.median(y, z, x) == m);
        CHECK(t.median(z, x, y) == m);
        CHECK(t.is_between(x, m, y));
        CHECK(t.is_between(y, m, z));
        CHECK(t.is_between(x, m, z));
        CHECK((t.median(x, y, z) == z) == t.is_between(x, z, y));
    }
}

TEST_CASE("segment membership agrees with betweenness") {
    MetricTree t = star3();
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        TreePoint x = t.sample_point(rng), y = t.sample_point(rng), p = t.sample_point(rng);
        MetricSegment s = t.segment(x, y);
        CHECK(s.length() == t.distance(x, y));
        CHECK(t.segment_contains(s, p) == t.is_between(x, p, y));
    }
}

TEST_CASE("point_along walks the segment") {
    MetricTree t = star3();
    MetricSegment s = t.segment(t.vertex_point("v"), t.vertex_point("w"));
    CHECK(t.point_along(s, Rat(0)) == t.vertex_point("v"));
    CHECK(t.point_along(s, Rat(2)) == t.vertex_point("c"));
    CHECK(t.point_along(s, Rat(5)) == t.vertex_point("w"));
    CHECK(t.point_along(s, Rat(7, 2)) == t.edge_point("c", "w", Rat(3, 2)));
    CHECK_THROWS_AS(t.point_along(s, Rat(6)), Error);
}

TEST_CASE("point parsing round-trips") {
    MetricTree t = star3();
    for (const char* key : {"V c", "V u", "E c w 3/2", "E c v 1/4"}) {
        TreePoint p = t.parse_point(key);
        CHECK(t.point_key(p) == key);
    }
    CHECK_THROWS_AS(t.parse_point("Q u"), Error);
    CHECK_THROWS_AS(t.parse_point("V nope"), Error);
    CHECK_THROWS_AS(t.parse_point("E c u"), Error);
}
