#pragma once

#include "mtw/subtree.hpp"

#include <cstdint>
#include <vector>

namespace mtw {

/// Decision machinery behind the Tn-width solver, built once per (tree, A)
/// and queried at many radii.
///
/// Any region X hitting every ball B(a_i, r) contains the gates
/// proj_{B(a_i, r)}(c) for each of its own points c, so
///   min #final points = min over anchors c of #final(conv of gates from c),
/// and the minimum is attained with c among the skeleton vertices of conv(A)
/// refined by the ball boundary points at radius r. Searching conv(A) only
/// is lossless because projection onto a convex region is nonexpansive.
///
/// Radii and lengths are exact rationals; queries run on an overflow-guarded
/// scaled-integer fast path when the common denominator permits.
class CoverSolver {
public:
    CoverSolver(const MetricTree& t, std::vector<TreePoint> a_set);

    /// Exact minimum number of final points over regions X with
    /// deviation(A, X) <= r.
    int min_leaves(const Rat& r) const;
    /// min_leaves(r) <= n, with early exit.
    bool feasible(const Rat& r, int n) const;
    /// Gate hull with at most n final points and deviation <= r exactly;
    /// among candidates, the lexicographically smallest final-point encoding
    /// wins. Requires feasible(r, n).
    Subtree witness(const Rat& r, int n) const;

    const Rat& deviation_to_first() const { return dev_first_; }
    int hull_leaf_count() const { return hull_leaves_; }
    const std::vector<TreePoint>& sample() const { return a_; }
    const MetricTree& tree() const { return *tree_; }

    struct SkelEdge {
        int a, b;       // node ids; original offset increases from a to b
        Rat len;
        int orig_edge;
        Rat orig_off_a; // canonical offset of node a on the original edge
    };

private:
    template <class Num> friend struct SweepCtx;

    const MetricTree* tree_;
    std::vector<TreePoint> a_;
    std::vector<TreePoint> nodes_;
    std::vector<SkelEdge> sedges_;
    std::vector<std::vector<std::pair<int, int>>> sadj_; // node -> (sedge, neighbor)
    std::vector<std::vector<Rat>> dist_;                 // node x node, exact
    std::vector<std::vector<int>> toward_;      // [target][x] = neighbor of x toward target
    std::vector<std::vector<int>> toward_edge_; // matching skeleton edge
    std::vector<int> a_node_;
    Int base_den_;    // lcm of skeleton length denominators
    bool int_path_ok_ = false;
    std::vector<std::vector<std::int64_t>> dist_base_; // dist * base_den
    std::vector<std::int64_t> selen_base_;
    int hull_leaves_ = 0;
    Rat dev_first_;

    int sweep_count(const Rat& r, int early_limit) const; // early_limit<0: full sweep
};

} // namespace mtw
