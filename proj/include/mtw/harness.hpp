#pragma once

#include "mtw/tree.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mtw {

/// Parameters for random instances: vertex counts, a rational grid of edge
/// lengths (len_min, len_min + len_step, ..., <= len_max), and sample sizes.
struct RandomInstanceSpec {
    int min_vertices = 2;
    int max_vertices = 8;
    Rat len_min = Rat(1, 4);
    Rat len_max = Rat(2);
    Rat len_step = Rat(1, 4);
    int min_sample = 1;
    int max_sample = 5;
    int trials = 200;
    std::uint64_t seed = 0;

    void validate() const; // InvalidSpec
};

struct CounterExample {
    int trial;
    std::uint64_t sub_seed;
    std::string what; // exact rational witness values
};

struct SuiteReport {
    std::string suite;
    int trials = 0;
    std::vector<CounterExample> failures;
    std::uint64_t seed = 0;
    double elapsed_ms = 0;
    bool pass() const { return failures.empty(); }
};

/// Uniform random labeled tree by random attachment, lengths drawn from the
/// spec's rational grid. Deterministic under the given rng state.
MetricTree generate_random_tree(const RandomInstanceSpec& spec, std::mt19937_64& rng);
inline MetricTree generate_random_tree(const RandomInstanceSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    return generate_random_tree(spec, rng);
}

/// Random sample of points on the tree (vertices and interior edge points).
std::vector<TreePoint> sample_point_set(const MetricTree& t, int count, std::mt19937_64& rng);

const std::vector<std::string>& suite_names();

/// Runs one named verification suite over random instances; every trial
/// derives an independent sub-seed from (seed, trial index), so reports are
/// reproducible. Throws UnknownSuite for unrecognized names.
SuiteReport run_suite(std::string_view name, const RandomInstanceSpec& spec);

} // namespace mtw
