#include "mtw/harness.hpp"

#include "mtw/axioms.hpp"
#include "mtw/errors.hpp"
#include "mtw/radial.hpp"
#include "mtw/subtree.hpp"
#include "mtw/widths.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

namespace mtw {

void RandomInstanceSpec::validate() const {
    if (min_vertices < 2 || max_vertices < min_vertices)
        throw Error(errc::invalid_spec, "vertex range must satisfy 2 <= min <= max");
    if (len_min <= 0 || len_step <= 0 || len_max < len_min)
        throw Error(errc::invalid_spec, "length grid must be positive and ordered");
    if (min_sample < 1 || max_sample < min_sample)
        throw Error(errc::invalid_spec, "sample range must satisfy 1 <= min <= max");
    if (trials < 1) throw Error(errc::invalid_spec, "trials must be >= 1");
}

MetricTree generate_random_tree(const RandomInstanceSpec& spec, std::mt19937_64& rng) {
    spec.validate();
    std::vector<Rat> grid;
    for (Rat v = spec.len_min; v <= spec.len_max; v += spec.len_step) grid.push_back(v);
    int n = spec.min_vertices +
            static_cast<int>(rng() % static_cast<std::uint64_t>(spec.max_vertices - spec.min_vertices + 1));
    std::vector<EdgeInput> edges;
    edges.reserve(static_cast<size_t>(n - 1));
    for (int i = 1; i < n; ++i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i));
        const Rat& len = grid[rng() % grid.size()];
        edges.push_back(EdgeInput{"v" + std::to_string(j), "v" + std::to_string(i), len});
    }
    return MetricTree(edges);
}

std::vector<TreePoint> sample_point_set(const MetricTree& t, int count, std::mt19937_64& rng) {
    std::vector<TreePoint> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        if (rng() % 3 == 0)
            out.push_back(t.vertex_point(static_cast<int>(rng() % static_cast<std::uint64_t>(t.vertex_count()))));
        else
            out.push_back(t.sample_point(rng));
    }
    return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, int trial) {
    return splitmix64(seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(trial + 1)));
}

Rat rand_rat01(std::mt19937_64& rng, unsigned den_bits = 12) {
    std::uint64_t den = 1ull << den_bits;
    return Rat(Int(rng() % (den + 1)), Int(den));
}

const Rat kTol = Rat(1, 1000000000);

using TrialFn = std::function<void(std::uint64_t, int, SuiteReport&)>;

void drive(SuiteReport& report, const RandomInstanceSpec& spec, const TrialFn& trial) {
    for (int i = 0; i < spec.trials; ++i) {
        ++report.trials;
        std::uint64_t s = sub_seed(spec.seed, i);
        trial(s, i, report);
    }
}

void fail(SuiteReport& report, int trial, std::uint64_t s, std::string what) {
    report.failures.push_back(CounterExample{trial, s, std::move(what)});
}

// ---- tree-side suites ------------------------------------------------------

void suite_axioms(const RandomInstanceSpec& spec, SuiteReport& report) {
    drive(report, spec, [&](std::uint64_t s, int i, SuiteReport& rep) {
        std::mt19937_64 rng(s);
        MetricTree t = generate_random_tree(spec, rng);
        AxiomReport ar = check_tree_axioms(t, {}, rng(), 20);
        for (const auto& f : ar.failures) fail(rep, i, s, f.kind + ": " + f.detail);
    });
}

void suite_betweenness(const RandomInstanceSpec& spec, SuiteReport& report) {
    drive(report, spec, [&](std::uint64_t s, int i, SuiteReport& rep) {
        std::mt19937_64 rng(s);
        MetricTree t = generate_random_tree(spec, rng);
        for (int q = 0; q < 20; ++q) {
            TreePoint a = t.sample_point(rng), d = t.sample_point(rng);
            MetricSegment sad = t.segment(a, d);
            Rat fb = rand_rat01(rng) * sad.length();
            Rat fc = rand_rat01(rng) * sad.length();
            if (fc < fb) std::swap(fb, fc);
            TreePoint b = t.point_along(sad, fb);
            TreePoint c = t.point_along(sad, fc);
            if (!t.is_between(a, b, c) || !t.is_between(a, c, d)) {
                fail(rep, i, s, "premise construction failed at " + t.point_key(b));
                continue;
            }
            if (!t.is_between(a, b, d) || !t.is_between(b, c, d))
                fail(rep, i, s,
                     "abc and acd but not (abd and bcd): a=" + t.point_key(a) + " b=" +
                         t.point_key(b) + " c=" + t.point_key(c) + " d=" + t.point_key(d));
        }
    });
}

void suite_compact_tree(const RandomInstanceSpec& spec, SuiteReport& report) {
    drive(report, spec, [&](std::uint64_t s, int i, SuiteReport& rep) {
        std::mt19937_64 rng(s);
        MetricTree t = generate_random_tree(spec, rng);
        AxiomReport ar = check_tree_axioms(t, {{t.sample_point(rng), t.sample_point(rng),
                                                t.sample_point(rng)}},
                                           rng(), 5);
        for (const auto& f : ar.failures)
            if (f.kind == "covering") fail(rep, i, s, f.detail);
    });
}

void suite_dim_char(const RandomInstanceSpec& spec, SuiteReport& report) {
    drive(report, spec, [&](std::uint64_t s, int i, SuiteReport& rep) {
        std::mt19937_64 rng(s);
        MetricTree t = generate_random_tree(spec, rng);
        int k = 1 + static_cast<int>(rng() % 6);
        std::vector<TreePoint> pts = sample_point_set(t, k, rng);
        // drop duplicates and points between two others: the rest is a
        // generator set with no betweenness triple
        std::vector<TreePoint> gen;
        for (const auto& p : pts) {
            bool dup = false;
            for (const auto& q : gen) dup = dup || q == p;
            if (!dup) gen.push_back(p);
        }
        std::vector<TreePoint> fin;
        for (size_t pi = 0; pi < gen.size(); ++pi) {
            bool between = false;
            for (size_t a = 0; a < gen.size() && !between; ++a)
                for (size_t b = a + 1; b < gen.size(); ++b) {
                    if (a == pi || b == pi) continue;
                    if (t.is_between(gen[a], gen[pi], gen[b])) {
                        between = true;
                        break;
                    }
                }
            if (!between) fin.push_back(gen[pi]);
        }
        Subtree hull = Subtree::hull(t, fin);
        if (hull.tn_dimension() != static_cast<int>(fin.size()))
            fail(rep, i, s,
                 "hull of " + std::to_string(fin.size()) + " independent generators has dimension " +
                     std::to_string(hull.tn_dimension()));
    });
}

void suite_nolarger(const RandomInstanceSpec& spec, SuiteReport& report) {
    drive(report, spec, [&](std::uint64_t s, int i, SuiteReport& rep) {
        std::mt19937_64 rng(s);
        MetricTree t = generate_random_tree(spec, rng);
        int k = 2 + static_cast<int>(rng() % 5);
        Subtree outer = Subtree::hull(t, sample_point_set(t, k, rng));
        // points inside the outer region: projections of fresh samples
        std::vector<TreePoint> inner_pts;
        int kk = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
        for (int j = 0; j < kk; ++j) inner_pts.push_back(outer.project(t.sample_point(rng)));
        Subtree inner = Subtree::hull(t, inner_pts);
        if (!inner.subset_of(outer))
            fail(rep, i, s, "projected hull escaped the outer region");
        else if (inner.tn_dimension() > outer.tn_dimension())
            fail(rep, i, s,
                 "nested regions with dimensions " + std::to_string(inner.tn_dimension()) + " > " +
                     std::to_string(outer.tn_dimension()));
    });
}

void suite_lower_dim(const RandomInstanceSpec& spec, SuiteReport& report) {
    drive(report, spec, [&](std::uint64_t s, int i, SuiteReport& rep) {
        std::mt19937_64 rng(s);
        MetricTree t = generate_random_tree(spec, rng);
        int k = 2 + static_cast<int>(rng() % 5);
        Subtree big = Subtree::hull(t, sample_point_set(t, k, rng));
        std::vector<TreePoint> fin = big.final_points();
        int n = static_cast<int>(fin.size());
        for (int m = 1; m <= n; ++m) {
            std::vector<TreePoint> sub(fin.begin(), fin.begin() + m);
            Subtree sm = Subtree::hull(t, sub);
            if (sm.tn_dimension() != m) {
                fail(rep, i, s,
                     "hull of " + std::to_string(m) + " final points has dimension " +
                         std::to_string(sm.tn_dimension()));
                break;
            }
            if (!sm.subset_of(big)) {
                fail(rep, i, s, "lower-dimensional hull escaped its parent");
                break;
            }
        }
    });
}

// ---- width suites ----------------------------------------------------------

void suite_noninc(const RandomInstanceSpec& spec, SuiteReport& report) {
    drive(report, spec, [&](std::uint64_t s, int i, SuiteReport& rep) {
        std::mt19937_64 rng(s);
        MetricTree t = generate_random_tree(spec, rng);
        int nb = std::max(2, spec.min_sample) +
                 static_cast<int>(rng() % static_cast<std::uint64_t>(spec.max_sample));
        std::vector<TreePoint> b_set = sample_point_set(t, nb, rng);
        std::vector<TreePoint> a_set(b_set.begin(),
                                     b_set.begin() + 1 + static_cast<long>(rng() % b_set.size()));
        int n_max = 4;
        auto seq_a = width_sequence(t, a_set, n_max, kTol);
        auto seq_b = width_sequence(t, b_set, n_max, kTol);
        for (int n = 0; n < n_max; ++n) {
            if (seq_a[static_cast<size_t>(n)].value() >
                seq_b[static_cast<size_t>(n)].value() + 2 * kTol)
                fail(rep, i, s,
                     "monotone in the set failed at n=" + std::to_string(n + 1) + ": " +
                         rat_string(seq_a[static_cast<size_t>(n)].value()) + " > " +
                         rat_string(seq_b[static_cast<size_t>(n)].value()));
        }
        for (int n = 0; n + 1 < n_max; ++n) {
            if (seq_b[static_cast<size_t>(n + 1)].value() >
                seq_b[static_cast<size_t>(n)].value() + 2 * kTol)
                fail(rep, i, s,
                     "sequence increased at n=" + std::to_string(n + 2) + ": " +
                         rat_string(seq_b[static_cast<size_t>(n + 1)].value()) + " > " +
                         rat_string(seq_b[static_cast<size_t>(n)].value()));
        }
    });
}

void suite_geq(const RandomInstanceSpec& spec, SuiteReport& report) {
    drive(report, spec, [&](std::uint64_t s, int i, SuiteReport& rep) {
        std::mt19937_64 rng(s);
        MetricTree t = generate_random_tree(spec, rng);
        int na = spec.min_sample +
                 static_cast<int>(rng() % static_cast<std::uint64_t>(spec.max_sample - spec.min_sample + 1));
        std::vector<TreePoint> a_set = sample_point_set(t, na, rng);
        CompactWidthResult cw = compact_width(t, a_set);
        if (cw.value != 0 || !cw.attained) {
            fail(rep, i, s, "compact width of a finite sample must be attained at 0");
            return;
        }
        auto seq = width_sequence(t, a_set, 4, kTol);
        for (const auto& wr : seq) {
            if (wr.lo < cw.value || wr.value() < cw.value)
                fail(rep, i, s, "width " + rat_string(wr.value()) + " below the compact width");
        }
    });
}

void suite_lim_delta(const RandomInstanceSpec& spec, SuiteReport& report) {
    drive(report, spec, [&](std::uint64_t s, int i, SuiteReport& rep) {
        std::mt19937_64 rng(s);
        MetricTree t = generate_random_tree(spec, rng);
        int na = spec.min_sample +
                 static_cast<int>(rng() % static_cast<std::uint64_t>(spec.max_sample - spec.min_sample + 1));
        std::vector<TreePoint> a_set = sample_point_set(t, na, rng);
        int stab = Subtree::hull(t, a_set).tn_dimension();
        auto seq = width_sequence(t, a_set, stab, kTol);
        const WidthResult& last = seq.back();
        if (!(last.exact && last.value() == 0)) {
            fail(rep, i, s,
                 "sequence not exactly zero at n=" + std::to_string(stab) +
                     ", value=" + rat_string(last.value()));
            return;
        }
        CompactWidthResult cw = compact_width(t, a_set);
        if (cw.value != last.value() || cw.sequence_limit != cw.value)
            fail(rep, i, s, "limit does not match the compact width");
    });
}

void suite_p1(const RandomInstanceSpec& spec, SuiteReport& report) {
    drive(report, spec, [&](std::uint64_t s, int i, SuiteReport& rep) {
        std::mt19937_64 rng(s);
        MetricTree t = generate_random_tree(spec, rng);
        TreePoint x = t.sample_point(rng), y = t.sample_point(rng);
        Rat eps = Rat(1 + static_cast<long>(rng() % 8), 4);
        Rat r = Rat(1 + static_cast<long>(rng() % 8), 4);
        P1Witness w = p1_witness(t, x, y, eps, r);
        Rat theta = w.delta / 2;
        P1Report pr = p1_check(t, w, theta, 1000, rng());
        for (const auto& v : pr.violations)
            fail(rep, i, s, "ball absorption failed: " + v);
    });
}

// ---- radial suite ----------------------------------------------------------

RadialPoint random_radial_point(std::mt19937_64& rng, int dim) {
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        long num = static_cast<long>(rng() % 17) - 8;
        long den = 1 + static_cast<long>(rng() % 4);
        c.emplace_back(num, den);
    }
    return RadialPoint(c);
}

void suite_radial(const RandomInstanceSpec& spec, SuiteReport& report) {
    drive(report, spec, [&](std::uint64_t s, int i, SuiteReport& rep) {
        std::mt19937_64 rng(s);
        int dim = 2 + static_cast<int>(rng() % 2);
        RadialPoint x = random_radial_point(rng, dim);
        RadialPoint y = random_radial_point(rng, dim);
        RadialPoint z = random_radial_point(rng, dim);

        // metric axioms, exactly
        if ((radial_distance(x, y) - radial_distance(y, x)).sign() != 0)
            fail(rep, i, s, "asymmetric: " + x.key() + " " + y.key());
        if ((radial_distance(x, x)).sign() != 0) fail(rep, i, s, "d(x,x) != 0 at " + x.key());
        if (x != y && radial_distance(x, y).sign() <= 0)
            fail(rep, i, s, "d(x,y) <= 0 for distinct " + x.key() + " " + y.key());
        RadicalSum tri = radial_distance(x, z) + radial_distance(z, y) - radial_distance(x, y);
        if (tri.sign() < 0)
            fail(rep, i, s,
                 "triangle inequality failed: " + x.key() + " " + z.key() + " " + y.key() +
                     " slack=" + tri.exact_string());

        // segment gluing through the origin: z on [x,y] splits it exactly
        Rat lam = rand_rat01(rng, 4);
        RadialPoint on_x = [&] {
            std::vector<Rat> c;
            for (int d = 0; d < dim; ++d) c.push_back(x.coord(d) * lam);
            return RadialPoint(c);
        }();
        if (!radial_is_between(x, on_x, y) && !collinear_through_origin(x, y))
            fail(rep, i, s, "point of [x,0] not between " + x.key() + " and " + y.key());
        // membership equivalence for a sampled candidate w
        RadialPoint w = random_radial_point(rng, dim);
        if (radial_is_between(x, on_x, y)) {
            bool in_union = radial_is_between(x, w, on_x) || radial_is_between(on_x, w, y);
            bool in_seg = radial_is_between(x, w, y);
            if (in_union != in_seg)
                fail(rep, i, s,
                     "gluing failed at w=" + w.key() + " for x=" + x.key() + " z=" + on_x.key() +
                         " y=" + y.key());
        }

        // ball width: exactly r for every n, with a verified lower-bound witness
        Rat r = Rat(1 + static_cast<long>(rng() % 12), 1 + static_cast<long>(rng() % 4));
        int n = 1 + static_cast<int>(rng() % 5);
        RadialBall ball(r, rng() % 2 == 0);
        BallWidthResult bw = ball_width(ball, n);
        if (bw.value != r)
            fail(rep, i, s, "ball width " + rat_string(bw.value) + " != " + rat_string(r));
        std::vector<RadialPoint> gens;
        int gcount = static_cast<int>(rng() % 4);
        for (int g = 0; g < gcount; ++g) gens.push_back(random_radial_point(rng, dim));
        Rat eps = r / Rat(2 + static_cast<long>(rng() % 6));
        try {
            RadialPoint p = ball_width_lower_bound_witness(ball, gens, eps, dim);
            if (!(p.norm_sq() > (r - eps) * (r - eps)))
                fail(rep, i, s, "witness too short: " + p.key());
        } catch (const Error& e) {
            fail(rep, i, s, std::string("witness construction failed: ") + e.what());
        }
    });
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "axioms",  "betweenness", "compact-tree", "dim-char", "geq",    "lim-delta",
        "lower-dim", "noninc",    "nolarger",     "p1",       "radial",
    };
    return names;
}

SuiteReport run_suite(std::string_view name, const RandomInstanceSpec& spec) {
    spec.validate();
    SuiteReport report;
    report.suite = std::string(name);
    report.seed = spec.seed;
    auto started = std::chrono::steady_clock::now();

    if (name == "axioms")
        suite_axioms(spec, report);
    else if (name == "betweenness")
        suite_betweenness(spec, report);
    else if (name == "compact-tree")
        suite_compact_tree(spec, report);
    else if (name == "dim-char")
        suite_dim_char(spec, report);
    else if (name == "geq")
        suite_geq(spec, report);
    else if (name == "lim-delta")
        suite_lim_delta(spec, report);
    else if (name == "lower-dim")
        suite_lower_dim(spec, report);
    else if (name == "noninc")
        suite_noninc(spec, report);
    else if (name == "nolarger")
        suite_nolarger(spec, report);
    else if (name == "p1")
        suite_p1(spec, report);
    else if (name == "radial")
        suite_radial(spec, report);
    else
        throw Error(errc::unknown_suite, "no suite named '" + std::string(name) + "'");

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

} // namespace mtw
