#include "mtw/widths.hpp"

#include "mtw/cover_solver.hpp"
#include "mtw/errors.hpp"

#include <algorithm>

namespace mtw {

int min_leaves_cover(const MetricTree& t, const std::vector<TreePoint>& a_set, const Rat& r) {
    if (r < 0) throw Error(errc::negative_radius, "radius " + rat_string(r));
    CoverSolver solver(t, a_set);
    return solver.min_leaves(r);
}

namespace {

WidthResult solve_width(const CoverSolver& solver, int n, const Rat& tolerance, int ambient_dim) {
    if (n < 1) throw Error(errc::invalid_argument, "width index n must be >= 1");
    if (tolerance <= 0)
        throw Error(errc::invalid_argument, "tolerance must be positive, got " + rat_string(tolerance));

    WidthResult res;
    res.tolerance = tolerance;
    res.star_convention_applied = n > ambient_dim;
    int n_eff = std::min(n, ambient_dim);

    if (solver.hull_leaf_count() <= n_eff) {
        // conv(A) itself qualifies: the width is exactly zero
        res.lo = res.hi = 0;
        res.exact = true;
        res.witness = Subtree::hull(solver.tree(), solver.sample());
        res.witness_dimension = res.witness->tn_dimension();
        return res;
    }

    Rat lo(0);                          // infeasible: min_leaves_cover(0) > n_eff
    Rat hi = solver.deviation_to_first(); // feasible: the single point a0
    while (hi - lo > tolerance) {
        Rat mid = (lo + hi) / 2;
        if (solver.feasible(mid, n_eff))
            hi = mid;
        else
            lo = mid;
    }
    res.lo = lo;
    res.hi = hi;
    res.exact = lo == hi;
    res.witness = solver.witness(hi, n_eff);
    res.witness_dimension = res.witness->tn_dimension();
    return res;
}

int ambient_dimension(const MetricTree& t) { return Subtree::whole_tree(t).tn_dimension(); }

} // namespace

WidthResult tn_width(const WidthProblem& problem, const Rat& tolerance) {
    if (!problem.tree) throw Error(errc::invalid_argument, "width problem has no tree");
    CoverSolver solver(*problem.tree, problem.sample);
    return solve_width(solver, problem.n, tolerance, ambient_dimension(*problem.tree));
}

std::pair<Rat, TreePoint> chebyshev_radius(const MetricTree& t,
                                           const std::vector<TreePoint>& a_set) {
    if (a_set.empty()) throw Error(errc::empty_input, "chebyshev radius of empty set");
    size_t bi = 0, bj = 0;
    Rat best(0);
    for (size_t i = 0; i < a_set.size(); ++i)
        for (size_t j = i + 1; j < a_set.size(); ++j) {
            Rat d = t.distance(a_set[i], a_set[j]);
            if (d > best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    if (best == 0) return {Rat(0), a_set.front()};
    TreePoint center = t.point_along(t.segment(a_set[bi], a_set[bj]), best / 2);
    return {best / 2, center};
}

std::vector<WidthResult> width_sequence(const MetricTree& t, const std::vector<TreePoint>& a_set,
                                        int n_max, const Rat& tolerance) {
    if (n_max < 1) throw Error(errc::invalid_argument, "n_max must be >= 1");
    CoverSolver solver(t, a_set);
    int ambient = ambient_dimension(t);
    std::vector<WidthResult> out;
    out.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        if (n > ambient && !out.empty()) {
            // T* convention: the ambient tree has no larger-dimensional
            // subsets, so the value repeats
            WidthResult rep = out.back();
            rep.star_convention_applied = true;
            out.push_back(std::move(rep));
            continue;
        }
        out.push_back(solve_width(solver, n, tolerance, ambient));
    }
    return out;
}

CompactWidthResult compact_width(const MetricTree& t, const std::vector<TreePoint>& a_set) {
    if (a_set.empty()) throw Error(errc::empty_input, "compact width of empty set");
    for (const auto& p : a_set) t.check_point(p);
    CompactWidthResult res;
    res.value = 0;
    res.witness = a_set;
    std::sort(res.witness.begin(), res.witness.end(),
              [&](const TreePoint& a, const TreePoint& b) { return t.point_less(a, b); });
    res.witness.erase(std::unique(res.witness.begin(), res.witness.end()), res.witness.end());
    res.attained = true;
    // the width sequence reaches zero once n covers the hull's final points
    CoverSolver solver(t, a_set);
    int stab = solver.hull_leaf_count();
    res.sequence_limit =
        solve_width(solver, stab, Rat(1, 1000000000), ambient_dimension(t)).value();
    return res;
}

P1Witness p1_witness(const MetricTree& t, const TreePoint& x, const TreePoint& y, const Rat& eps,
                     const Rat& r) {
    if (eps <= 0) throw Error(errc::invalid_argument, "epsilon must be positive");
    if (r <= 0) throw Error(errc::invalid_argument, "radius must be positive");
    t.check_point(x);
    t.check_point(y);
    P1Witness w;
    w.epsilon = eps;
    w.radius = r;
    w.delta = eps / 2;
    w.x = x;
    w.y = y;
    Rat d = t.distance(x, y);
    w.z = t.point_along(t.segment(x, y), rat_min(w.delta, d));
    return w;
}

P1Report p1_check(const MetricTree& t, const P1Witness& witness, const Rat& theta,
                  int sample_count, std::uint64_t seed) {
    if (theta <= 0 || theta >= witness.delta)
        throw Error(errc::theta_out_of_range, "need 0 < theta < delta = " +
                                                  rat_string(witness.delta) + ", got " +
                                                  rat_string(theta));
    P1Report report;
    std::mt19937_64 rng(seed);
    Rat bound_x = witness.radius + witness.delta;
    Rat bound_yz = witness.radius + theta;
    for (int i = 0; i < sample_count; ++i) {
        ++report.samples;
        TreePoint w = t.sample_point(rng);
        if (t.distance(witness.x, w) > bound_x) continue;
        if (t.distance(witness.y, w) > bound_yz) continue;
        ++report.in_intersection;
        Rat dz = t.distance(witness.z, w);
        if (dz > bound_yz) {
            report.violations.push_back(
                "w=" + t.point_key(w) + " xw=" + rat_string(t.distance(witness.x, w)) +
                " yw=" + rat_string(t.distance(witness.y, w)) + " zw=" + rat_string(dz) +
                " allowed=" + rat_string(bound_yz));
        }
    }
    return report;
}

} // namespace mtw
