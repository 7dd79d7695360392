#include "mtw/widths.hpp"

#include "mtw/errors.hpp"

#include <algorithm>
#include <map>

namespace mtw {

namespace {

// binomial with saturation; enough to test against the tuple guard
std::uint64_t choose_capped(std::uint64_t n, int k, std::uint64_t cap) {
    Int c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * Int(n - static_cast<std::uint64_t>(i) + 1) / i;
        if (c > Int(cap) * 4) return cap + 1;
    }
    Int capped = Int(cap) + 1;
    return c > capped ? cap + 1 : c.convert_to<std::uint64_t>();
}

} // namespace

BruteForceResult brute_force_tn_width(const MetricTree& t, const std::vector<TreePoint>& a_set,
                                      int n, const Rat& resolution, std::uint64_t max_tuples) {
    if (a_set.empty()) throw Error(errc::empty_input, "brute force width of empty set");
    if (n < 1) throw Error(errc::invalid_argument, "width index n must be >= 1");
    if (resolution <= 0) throw Error(errc::invalid_argument, "resolution must be positive");

    Subtree hull = Subtree::hull(t, a_set);

    // candidate leaf positions: hull vertices and tips, the resolution grid
    // on every covered interval, and the pairwise midpoints of A
    std::map<std::string, TreePoint> cands;
    auto add = [&](const TreePoint& p) { cands.emplace(t.point_key(p), p); };
    for (int v : hull.vertices()) add(t.vertex_point(v));
    for (const auto& p : hull.final_points()) add(p);
    for (const auto& [e, iv] : hull.cover()) {
        add(t.edge_point_canonical(e, iv.first));
        add(t.edge_point_canonical(e, iv.second));
        Rat q = iv.first / resolution;
        Int first_step = (boost::multiprecision::numerator(q) +
                          boost::multiprecision::denominator(q) - 1) /
                         boost::multiprecision::denominator(q); // ceil, offsets nonnegative
        for (Rat off = Rat(first_step) * resolution; off <= iv.second; off += resolution)
            add(t.edge_point_canonical(e, off));
    }
    for (size_t i = 0; i < a_set.size(); ++i)
        for (size_t j = i + 1; j < a_set.size(); ++j) {
            MetricSegment s = t.segment(a_set[i], a_set[j]);
            add(t.point_along(s, s.length() / 2));
        }

    std::vector<TreePoint> cand;
    cand.reserve(cands.size());
    for (auto& [key, p] : cands) cand.push_back(p);
    int nc = static_cast<int>(cand.size());
    int k = std::min(n, nc);

    if (choose_capped(static_cast<std::uint64_t>(nc), k, max_tuples) > max_tuples)
        throw Error(errc::instance_too_large,
                    std::to_string(nc) + " candidates give more than " +
                        std::to_string(max_tuples) + " tuples of size " + std::to_string(k));

    // exact distance tables, then one common scale so the search runs on ints
    std::vector<std::vector<Rat>> dc(static_cast<size_t>(nc), std::vector<Rat>(static_cast<size_t>(nc), Rat(0)));
    for (int i = 0; i < nc; ++i)
        for (int j = i + 1; j < nc; ++j) dc[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            dc[static_cast<size_t>(j)][static_cast<size_t>(i)] = t.distance(cand[static_cast<size_t>(i)], cand[static_cast<size_t>(j)]);
    size_t m = a_set.size();
    std::vector<std::vector<Rat>> da(m, std::vector<Rat>(static_cast<size_t>(nc), Rat(0)));
    for (size_t a = 0; a < m; ++a)
        for (int i = 0; i < nc; ++i)
            da[a][static_cast<size_t>(i)] = t.distance(a_set[a], cand[static_cast<size_t>(i)]);

    Int scale = 1;
    auto fold = [&scale](const Rat& q) {
        const Int& d = boost::multiprecision::denominator(q);
        scale = scale / boost::multiprecision::gcd(scale, d) * d;
    };
    for (const auto& row : dc)
        for (const auto& q : row) fold(q);
    for (const auto& row : da)
        for (const auto& q : row) fold(q);

    bool use_int = true;
    Rat max_entry(0);
    for (const auto& row : dc)
        for (const auto& q : row) max_entry = rat_max(max_entry, q);
    for (const auto& row : da)
        for (const auto& q : row) max_entry = rat_max(max_entry, q);
    if (Rat(max_entry * Rat(scale)) > Rat(Int(1) << 58)) use_int = false;

    auto scaled = [&](const Rat& q) { return Int(q * Rat(scale)).convert_to<std::int64_t>(); };

    struct Search {
        int nc, k;
        size_t m;
        std::vector<std::int64_t> dc, da; // row-major
        std::int64_t best = -1;
        std::vector<int> best_tuple;
        void run() {
            std::vector<int> idx(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
            while (true) {
                eval(idx);
                int pos = k - 1;
                while (pos >= 0 && idx[static_cast<size_t>(pos)] == nc - k + pos) --pos;
                if (pos < 0) break;
                ++idx[static_cast<size_t>(pos)];
                for (int i = pos + 1; i < k; ++i)
                    idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
            }
        }
        void eval(const std::vector<int>& idx) {
            std::int64_t dev2 = 0; // deviation in doubled-scale units
            for (size_t a = 0; a < m; ++a) {
                const std::int64_t* ra = &da[a * static_cast<size_t>(nc)];
                std::int64_t inner = -1;
                for (int p = 0; p < k; ++p) {
                    for (int q = p; q < k; ++q) {
                        std::int64_t ip = idx[static_cast<size_t>(p)], iq = idx[static_cast<size_t>(q)];
                        std::int64_t v = ra[ip] + ra[iq] -
                                         dc[static_cast<size_t>(ip) * static_cast<size_t>(nc) +
                                            static_cast<size_t>(iq)];
                        if (v < 0) v = 0;
                        if (inner < 0 || v < inner) inner = v;
                    }
                    if (inner == 0) break;
                }
                if (inner > dev2) dev2 = inner;
                if (best >= 0 && dev2 >= best) return; // cannot improve
            }
            if (best < 0 || dev2 < best) {
                best = dev2;
                best_tuple = idx;
            }
        }
    };

    Search search;
    search.nc = nc;
    search.k = k;
    search.m = m;
    if (use_int) {
        search.dc.resize(static_cast<size_t>(nc) * static_cast<size_t>(nc));
        for (int i = 0; i < nc; ++i)
            for (int j = 0; j < nc; ++j)
                search.dc[static_cast<size_t>(i) * static_cast<size_t>(nc) + static_cast<size_t>(j)] =
                    scaled(dc[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        search.da.resize(m * static_cast<size_t>(nc));
        for (size_t a = 0; a < m; ++a)
            for (int i = 0; i < nc; ++i)
                search.da[a * static_cast<size_t>(nc) + static_cast<size_t>(i)] =
                    scaled(da[a][static_cast<size_t>(i)]);
        search.run();
    } else {
        throw Error(errc::instance_too_large, "edge lengths too fine for the integer search");
    }

    std::vector<TreePoint> tuple;
    tuple.reserve(static_cast<size_t>(k));
    for (int i : search.best_tuple) tuple.push_back(cand[static_cast<size_t>(i)]);
    BruteForceResult res{Rat(Int(search.best), 2 * scale), Subtree::hull(t, tuple)};
    return res;
}

} // namespace mtw
