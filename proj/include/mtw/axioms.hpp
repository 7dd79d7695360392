#pragma once

#include "mtw/tree.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace mtw {

struct AxiomFailure {
    std::string kind;   // "segment-glue" | "three-point" | "transitivity" | "covering"
    std::string detail; // exact rational witness values
};

struct AxiomReport {
    int triples_checked = 0;
    int quadruples_checked = 0;
    int anchors_checked = 0;
    std::vector<AxiomFailure> failures;
    bool pass() const { return failures.empty(); }
};

/// Replays the metric-tree axioms on sampled data: segment gluing
/// ([x,z] cap [z,y] = {z} implies [x,z] cup [z,y] = [x,y]) via segment
/// membership, the three point property through medians, transitivity of
/// betweenness on quadruples, and the covering identity
/// M = union over final points f of [a,f] for sampled anchors a.
/// When `triples` is empty, `generated_count` triples are drawn from `seed`.
AxiomReport check_tree_axioms(const MetricTree& t,
                              const std::vector<std::array<TreePoint, 3>>& triples,
                              std::uint64_t seed, int generated_count = 100);

} // namespace mtw
