#include "mtw/axioms.hpp"

#include "mtw/subtree.hpp"

#include <algorithm>
#include <map>

namespace mtw {

namespace {

// endpoints, traversed vertices, and leg midpoints: an exact sample of the
// segment that includes every combinatorial cell it crosses
std::vector<TreePoint> segment_samples(const MetricTree& t, const MetricSegment& s) {
    std::vector<TreePoint> pts{s.x(), s.y()};
    for (int v : s.via()) pts.push_back(t.vertex_point(v));
    for (const auto& leg : s.legs())
        pts.push_back(t.edge_point_canonical(leg.edge, (leg.from + leg.to) / 2));
    return pts;
}

std::string triple_detail(const MetricTree& t, const TreePoint& x, const TreePoint& z,
                          const TreePoint& y) {
    return "x=" + t.point_key(x) + " z=" + t.point_key(z) + " y=" + t.point_key(y) +
           " xy=" + rat_string(t.distance(x, y)) + " xz=" + rat_string(t.distance(x, z)) +
           " zy=" + rat_string(t.distance(z, y));
}

} // namespace

AxiomReport check_tree_axioms(const MetricTree& t,
                              const std::vector<std::array<TreePoint, 3>>& triples,
                              std::uint64_t seed, int generated_count) {
    AxiomReport report;
    std::mt19937_64 rng(seed);

    std::vector<std::array<TreePoint, 3>> work = triples;
    if (work.empty()) {
        work.reserve(static_cast<size_t>(generated_count));
        for (int i = 0; i < generated_count; ++i)
            work.push_back({t.sample_point(rng), t.sample_point(rng), t.sample_point(rng)});
    }

    for (const auto& [x, y, z] : work) {
        ++report.triples_checked;
        MetricSegment sxy = t.segment(x, y);
        MetricSegment sxz = t.segment(x, z);
        MetricSegment szy = t.segment(z, y);

        // three point property: [x,z] cap [y,z] = [w,z] with w = median
        TreePoint w = t.median(x, y, z);
        for (const auto& p : segment_samples(t, sxz)) {
            bool in_both = t.segment_contains(sxz, p) && t.segment_contains(szy, p);
            bool in_wz = t.is_between(w, p, z);
            if (in_both != in_wz) {
                report.failures.push_back(
                    {"three-point", triple_detail(t, x, z, y) + " p=" + t.point_key(p) +
                                        " w=" + t.point_key(w)});
            }
        }

        // Definition 1.2(2): premise [x,z] cap [z,y] = {z} iff z is between
        if (t.is_between(x, z, y)) {
            auto check_union = [&](const TreePoint& p) {
                bool in_union = t.segment_contains(sxz, p) || t.segment_contains(szy, p);
                bool in_xy = t.segment_contains(sxy, p);
                if (in_union != in_xy)
                    report.failures.push_back(
                        {"segment-glue", triple_detail(t, x, z, y) + " p=" + t.point_key(p)});
            };
            for (const auto& p : segment_samples(t, sxy)) check_union(p);
            for (const auto& p : segment_samples(t, sxz)) check_union(p);
            for (const auto& p : segment_samples(t, szy)) check_union(p);
        }
    }

    // transitivity of betweenness: abc and acd imply abd and bcd
    int quads = work.empty() ? 0 : std::max<int>(generated_count, 1);
    for (int i = 0; i < quads; ++i) {
        ++report.quadruples_checked;
        TreePoint a = t.sample_point(rng), d = t.sample_point(rng);
        MetricSegment sad = t.segment(a, d);
        // draw b, c on [a,d] so the premises hold with certainty
        Rat len = sad.length();
        Rat fb = Rat(rng() & 0xFFFFull, 0x10000) * len;
        Rat fc = Rat(rng() & 0xFFFFull, 0x10000) * len;
        if (fc < fb) std::swap(fb, fc);
        TreePoint b = t.point_along(sad, fb);
        TreePoint c = t.point_along(sad, fc);
        if (!(t.is_between(a, b, c) && t.is_between(a, c, d))) {
            report.failures.push_back({"transitivity", "premise failed: a=" + t.point_key(a) +
                                                           " b=" + t.point_key(b) +
                                                           " c=" + t.point_key(c) +
                                                           " d=" + t.point_key(d)});
            continue;
        }
        if (!t.is_between(a, b, d) || !t.is_between(b, c, d)) {
            report.failures.push_back({"transitivity", "a=" + t.point_key(a) + " b=" +
                                                           t.point_key(b) + " c=" + t.point_key(c) +
                                                           " d=" + t.point_key(d)});
        }
    }

    // covering identity: M = union over f in F_M of [a,f]
    Subtree whole = Subtree::whole_tree(t);
    std::vector<TreePoint> tips = whole.final_points();
    int anchor_count = std::min(5, std::max(1, generated_count / 20));
    for (int i = 0; i < anchor_count; ++i) {
        ++report.anchors_checked;
        TreePoint a = t.sample_point(rng);
        std::map<int, std::vector<std::pair<Rat, Rat>>> covered;
        for (const auto& f : tips) {
            MetricSegment s = t.segment(a, f);
            for (const auto& leg : s.legs())
                covered[leg.edge].emplace_back(rat_min(leg.from, leg.to),
                                               rat_max(leg.from, leg.to));
        }
        for (int e = 0; e < t.edge_count(); ++e) {
            auto it = covered.find(e);
            const Rat& len = t.edge(e).length;
            std::vector<std::pair<Rat, Rat>> ivs =
                it == covered.end() ? std::vector<std::pair<Rat, Rat>>{} : it->second;
            std::sort(ivs.begin(), ivs.end());
            Rat reach(0);
            for (const auto& [lo, hi] : ivs) {
                if (lo > reach) break;
                reach = rat_max(reach, hi);
            }
            if (reach < len) {
                report.failures.push_back(
                    {"covering", "anchor " + t.point_key(a) + ": edge " +
                                     t.vertex_name(t.edge(e).u) + "-" + t.vertex_name(t.edge(e).v) +
                                     " covered only to " + rat_string(reach) + " of " +
                                     rat_string(len)});
                break;
            }
        }
    }

    return report;
}

} // namespace mtw
