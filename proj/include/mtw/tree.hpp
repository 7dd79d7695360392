#pragma once

#include "mtw/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mtw {

class MetricTree;

/// A location on a metric tree: either a vertex or an interior point of an
/// edge. Canonical form: offsets 0 and length(u,v) normalize to the vertex
/// form, and edge offsets are measured from the lexicographically smaller
/// endpoint. Two points are equal iff their canonical forms are identical.
class TreePoint {
public:
    TreePoint() = default;

    bool is_vertex() const { return edge_ < 0; }
    int vertex() const { return vertex_; }
    int edge() const { return edge_; }
    const Rat& offset() const { return offset_; }

    bool operator==(const TreePoint& o) const {
        return vertex_ == o.vertex_ && edge_ == o.edge_ && offset_ == o.offset_;
    }
    bool operator!=(const TreePoint& o) const { return !(*this == o); }

private:
    friend class MetricTree;
    int vertex_ = -1;
    int edge_ = -1;
    Rat offset_; // from the canonical (smaller-named) endpoint, 0 < offset < length
    std::uint64_t tree_serial_ = 0;
};

/// One traversed stretch of a single edge, in canonical edge coordinates;
/// `from` is the offset at the end nearer the segment's start point.
struct SegmentLeg {
    int edge;
    Rat from, to;
};

/// The unique metric segment [x,y]: endpoints, the ordered vertices it
/// passes through, and the per-edge legs in traversal order.
class MetricSegment {
public:
    const TreePoint& x() const { return x_; }
    const TreePoint& y() const { return y_; }
    const Rat& length() const { return length_; }
    const std::vector<int>& via() const { return via_; }
    const std::vector<SegmentLeg>& legs() const { return legs_; }

private:
    friend class MetricTree;
    TreePoint x_, y_;
    Rat length_;
    std::vector<int> via_;
    std::vector<SegmentLeg> legs_;
};

struct EdgeInput {
    std::string u, v;
    Rat length;
};

/// Finite metric tree: connected, acyclic, positively weighted. Immutable
/// after construction; all queries are safe for concurrent use.
class MetricTree {
public:
    struct Edge {
        int u, v; // vertex_name(u) < vertex_name(v)
        Rat length;
    };

    /// Validates and indexes the edge list. Throws CycleDetected,
    /// Disconnected, NonpositiveLength, DuplicateEdge or EmptyInput,
    /// naming the offending element.
    explicit MetricTree(const std::vector<EdgeInput>& edges);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& vertex_name(int v) const { return names_[static_cast<size_t>(v)]; }
    int find_vertex(std::string_view name) const;
    int require_vertex(std::string_view name) const; // PointNotOnTree if absent
    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
    int find_edge(int a, int b) const; // -1 if not adjacent
    const std::vector<std::pair<int, int>>& incident(int v) const { // (edge, neighbor)
        return adj_[static_cast<size_t>(v)];
    }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    const Rat& total_length() const { return total_length_; }
    std::uint64_t serial() const { return serial_; }

    // -- points ------------------------------------------------------------
    TreePoint vertex_point(int v) const;
    TreePoint vertex_point(std::string_view name) const;
    TreePoint edge_point(std::string_view u, std::string_view v, const Rat& offset_from_u) const;
    /// Offset in [0, length] along canonical edge orientation; ends normalize
    /// to vertex form.
    TreePoint edge_point_canonical(int e, const Rat& offset) const;
    void check_point(const TreePoint& p) const; // PointNotOnTree on mismatch
    /// Canonical encoding, also the points-file syntax: "V u" | "E u v 3/4".
    std::string point_key(const TreePoint& p) const;
    bool point_less(const TreePoint& a, const TreePoint& b) const;
    /// Parses "V <id>" or "E <u> <v> <offset>".
    TreePoint parse_point(std::string_view line) const;
    /// Uniform point on the tree (edges weighted by length, dyadic offsets).
    TreePoint sample_point(std::mt19937_64& rng) const;

    // -- metric ------------------------------------------------------------
    Rat distance(const TreePoint& p, const TreePoint& q) const;
    MetricSegment segment(const TreePoint& x, const TreePoint& y) const;
    bool is_between(const TreePoint& x, const TreePoint& z, const TreePoint& y) const;
    /// The three point property's w: the unique point on all three pairwise
    /// segments.
    TreePoint median(const TreePoint& x, const TreePoint& y, const TreePoint& z) const;
    /// Point of [x,y] at a given distance from x.
    TreePoint point_along(const MetricSegment& s, const Rat& dist_from_x) const;
    /// Membership decided from the segment's legs; agrees with is_between.
    bool segment_contains(const MetricSegment& s, const TreePoint& p) const;

    // -- vertex-level helpers ----------------------------------------------
    Rat vertex_distance(int a, int b) const;
    std::vector<int> vertex_path(int a, int b) const; // inclusive
    std::vector<int> leaves() const;                  // degree <= 1 vertices

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_; // vertex -> (edge, neighbor)
    std::vector<int> parent_;
    std::vector<int> parent_edge_;
    std::vector<int> depth_;
    std::vector<Rat> root_dist_;
    Rat total_length_;
    std::uint64_t serial_;

    int lca(int a, int b) const;
    // (vertex, offset) anchors a point resolves to, with cost to reach them
    struct Anchor {
        int vertex;
        Rat cost;
    };
    void anchors(const TreePoint& p, Anchor out[2], int& count) const;
};

} // namespace mtw
