#pragma once

#include "mtw/tree.hpp"

#include <map>
#include <set>
#include <vector>

namespace mtw {

/// A closed convex subset of a metric tree, stored as per-edge covered
/// sub-intervals (closed, rational endpoints) plus the set of covered
/// vertices. Built as a union of metric segments, so the region is always
/// nonempty, connected and convex. Immutable once built.
class Subtree {
public:
    struct EdgeCover {
        int edge;
        Rat lo, hi; // canonical offsets, 0 <= lo <= hi <= length
    };

    /// conv(points): the union of all pairwise segments, equivalently the
    /// union of segments from one member to every other.
    static Subtree hull(const MetricTree& t, const std::vector<TreePoint>& points);
    /// The whole tree as a region.
    static Subtree whole_tree(const MetricTree& t);

    const MetricTree& tree() const { return *tree_; }
    bool contains(const TreePoint& p) const;
    bool is_single_point() const;

    /// F_s: members lying in no open segment of the region; the leaf tips,
    /// or the point itself for a degenerate region. Sorted canonically.
    std::vector<TreePoint> final_points() const;
    /// |final_points|: the n for which the region is Tn-dimensional.
    int tn_dimension() const;

    /// Nearest point of the region; identity on members.
    TreePoint project(const TreePoint& p) const;
    Rat distance_to(const TreePoint& p) const;
    /// max over a in A of d(a, region); zero iff A is inside the region.
    Rat deviation(const std::vector<TreePoint>& a_set) const;

    bool operator==(const Subtree& o) const {
        return cover_ == o.cover_ && verts_ == o.verts_;
    }
    bool subset_of(const Subtree& o) const;

    const std::map<int, std::pair<Rat, Rat>>& cover() const { return cover_; }
    const std::set<int>& vertices() const { return verts_; }
    std::vector<EdgeCover> edge_cover() const;
    TreePoint anchor_point() const; // deterministic member

    /// Asserts connectivity and convexity of the stored region (test aid).
    void validate() const;

private:
    explicit Subtree(const MetricTree& t) : tree_(&t) {}
    void add_point(const TreePoint& p);
    void add_segment(const MetricSegment& s);
    void canonicalize();

    const MetricTree* tree_ = nullptr;
    std::map<int, std::pair<Rat, Rat>> cover_;
    std::set<int> verts_;
};

inline Subtree convex_hull(const MetricTree& t, const std::vector<TreePoint>& points) {
    return Subtree::hull(t, points);
}

inline std::vector<TreePoint> final_points(const Subtree& s) { return s.final_points(); }
inline int tn_dimension(const Subtree& s) { return s.tn_dimension(); }
inline TreePoint project(const Subtree& s, const TreePoint& p) { return s.project(p); }
inline Rat deviation(const std::vector<TreePoint>& a_set, const Subtree& s) {
    return s.deviation(a_set);
}

} // namespace mtw
