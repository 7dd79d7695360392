#include "doctest.h"

#include "mtw/errors.hpp"
#include "mtw/harness.hpp"
#include "mtw/io.hpp"

using namespace mtw;

TEST_CASE("random trees are deterministic under the seed") {
    RandomInstanceSpec spec;
    spec.min_vertices = 10;
    spec.max_vertices = 10;
    spec.len_min = Rat(1, 2);
    spec.len_max = Rat(4);
    spec.len_step = Rat(1, 2);
    spec.seed = 7;
    MetricTree a = generate_random_tree(spec);
    MetricTree b = generate_random_tree(spec);
    CHECK(a.vertex_count() == 10);
    CHECK(a.edge_count() == 9);
    CHECK(emit_tree_tsv(a) == emit_tree_tsv(b));

    RandomInstanceSpec tiny;
    tiny.min_vertices = 2;
    tiny.max_vertices = 2;
    CHECK(generate_random_tree(tiny).vertex_count() == 2);

    RandomInstanceSpec bad;
    bad.min_vertices = 1;
    CHECK_THROWS_AS(generate_random_tree(bad), Error);
}

TEST_CASE("suites run clean and deterministically") {
    RandomInstanceSpec spec;
    spec.trials = 5;
    spec.seed = 42;
    for (const auto& name : suite_names()) {
        SuiteReport r = run_suite(name, spec);
        CHECK(r.trials == 5);
        if (!r.pass())
            for (const auto& f : r.failures) MESSAGE(name, " trial ", f.trial, ": ", f.what);
        CHECK(r.pass());
    }
    CHECK_THROWS_AS(run_suite("unknown", spec), Error);

    // identical (suite, spec, seed) gives identical reports modulo elapsed time
    nlohmann::json a = suite_report_to_json(run_suite("noninc", spec));
    nlohmann::json b = suite_report_to_json(run_suite("noninc", spec));
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("single-trial axioms suite on a fixed seed") {
    RandomInstanceSpec spec;
    spec.trials = 1;
    spec.min_vertices = 2;
    spec.max_vertices = 2;
    spec.seed = 9;
    SuiteReport r = run_suite("axioms", spec);
    CHECK(r.pass());
}
