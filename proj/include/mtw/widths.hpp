#pragma once

#include "mtw/subtree.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mtw {

struct WidthProblem {
    const MetricTree* tree;
    std::vector<TreePoint> sample; // the set A
    int n;
};

/// A certified bracket for a Tn-width: the optimum lies in [lo, hi].
/// `witness` deviates from A by at most hi exactly, and when lo > 0 the
/// decision oracle rejects radius lo with every region of at most n leaves.
struct WidthResult {
    Rat lo, hi;
    std::optional<Subtree> witness;
    int witness_dimension = 0;
    bool star_convention_applied = false;
    Rat tolerance;
    bool exact = false; // lo == hi
    const Rat& value() const { return hi; }
};

struct CompactWidthResult {
    Rat value;                      // always 0 for a finite sample
    std::vector<TreePoint> witness; // A itself, a compact set
    bool attained = true;
    Rat sequence_limit;             // limit of the Tn-width sequence; equals value
};

struct BruteForceResult {
    Rat value;
    Subtree witness;
};

struct P1Witness {
    Rat delta;
    TreePoint z;
    TreePoint x, y;
    Rat epsilon, radius;
};

struct P1Report {
    int samples = 0;
    int in_intersection = 0;
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

/// Decision oracle: the minimum number of final points over regions X with
/// deviation(A, X) <= r. Exact for rational r. Searches conv(A) only, which
/// is lossless because projection onto a convex region is nonexpansive.
int min_leaves_cover(const MetricTree& t, const std::vector<TreePoint>& a_set, const Rat& r);

/// Certified bracket of width <= tolerance for the Tn-width, by binary
/// search on [0, deviation(A, {a0})] with min_leaves_cover as the
/// feasibility predicate. The witness has at most n final points.
WidthResult tn_width(const WidthProblem& problem, const Rat& tolerance);

/// (half of the max pairwise distance, midpoint of a diametral pair):
/// the exact T1-width, used as a cross-check on the parametric solver.
std::pair<Rat, TreePoint> chebyshev_radius(const MetricTree& t,
                                           const std::vector<TreePoint>& a_set);

/// Independent enumeration oracle: minimizes deviation over hulls of
/// candidate tuples drawn from {hull vertices} + {grid points at multiples
/// of `resolution` on hull edges} + {pairwise midpoints of A}. The result
/// overestimates the true width by at most `resolution`.
BruteForceResult brute_force_tn_width(const MetricTree& t, const std::vector<TreePoint>& a_set,
                                      int n, const Rat& resolution,
                                      std::uint64_t max_tuples = 20000000);

/// (delta_1, ..., delta_n_max); entries past the ambient tree's dimension
/// repeat the last achievable value with star_convention_applied set.
std::vector<WidthResult> width_sequence(const MetricTree& t, const std::vector<TreePoint>& a_set,
                                        int n_max, const Rat& tolerance);

/// A finite sample is itself compact, so its compact width is 0 and is
/// attained; also reports the limit of the width sequence for cross-checking.
CompactWidthResult compact_width(const MetricTree& t, const std::vector<TreePoint>& a_set);

/// delta = eps/2 and z on [x,y] at distance min(delta, d(x,y)) from x; then
/// B(x,r+delta) cap B(y,r+theta) is inside B(z,r+theta) for 0 < theta < delta.
P1Witness p1_witness(const MetricTree& t, const TreePoint& x, const TreePoint& y, const Rat& eps,
                     const Rat& r);

/// Samples points uniformly from the tree and checks the ball-absorption
/// contract of the witness; violations carry exact rational records.
P1Report p1_check(const MetricTree& t, const P1Witness& witness, const Rat& theta,
                  int sample_count, std::uint64_t seed);

} // namespace mtw
