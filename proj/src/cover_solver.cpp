#include "mtw/cover_solver.hpp"

#include "mtw/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace mtw {

namespace {

template <class Num>
struct Loc {
    int node = -1;
    int se = -1;
    Num off{};
    bool is_node() const { return node >= 0; }
    bool operator==(const Loc& o) const {
        return node == o.node && se == o.se && off == o.off;
    }
    bool operator<(const Loc& o) const {
        if (node != o.node) return node < o.node;
        if (se != o.se) return se < o.se;
        return off < o.off;
    }
};

} // namespace

template <class Num>
struct SweepCtx {
    const CoverSolver& s;
    const std::vector<std::vector<Num>>* dist; // node x node, ctx scale
    const std::vector<Num>* selen;             // skeleton edge lengths, ctx scale
    Num radius;

    // owned storage for scaled copies (unused in exact-rational mode)
    std::vector<std::vector<Num>> dist_store;
    std::vector<Num> selen_store;

    using L = Loc<Num>;

    static L node_loc(int i) { return L{i, -1, Num{}}; }

    L normalize(L loc) const {
        if (loc.is_node()) return loc;
        const auto& e = s.sedges_[static_cast<size_t>(loc.se)];
        if (loc.off == Num{}) return node_loc(e.a);
        if (loc.off == (*selen)[static_cast<size_t>(loc.se)]) return node_loc(e.b);
        return loc;
    }

    Num node_dist(int a, int b) const { return (*dist)[static_cast<size_t>(a)][static_cast<size_t>(b)]; }

    Num loc_dist(const L& p, const L& q) const {
        if (p.is_node() && q.is_node()) return node_dist(p.node, q.node);
        if (p.is_node()) return loc_dist(q, p);
        const auto& pe = s.sedges_[static_cast<size_t>(p.se)];
        Num plen = (*selen)[static_cast<size_t>(p.se)];
        if (q.is_node()) {
            Num via_a = p.off + node_dist(pe.a, q.node);
            Num via_b = plen - p.off + node_dist(pe.b, q.node);
            return via_a < via_b ? via_a : via_b;
        }
        if (p.se == q.se) return p.off < q.off ? Num(q.off - p.off) : Num(p.off - q.off);
        const auto& qe = s.sedges_[static_cast<size_t>(q.se)];
        Num qlen = (*selen)[static_cast<size_t>(q.se)];
        Num best = p.off + node_dist(pe.a, qe.a) + q.off;
        Num alt = p.off + node_dist(pe.a, qe.b) + (qlen - q.off);
        if (alt < best) best = alt;
        alt = (plen - p.off) + node_dist(pe.b, qe.a) + q.off;
        if (alt < best) best = alt;
        alt = (plen - p.off) + node_dist(pe.b, qe.b) + (qlen - q.off);
        if (alt < best) best = alt;
        return best;
    }

    // proj_{B(a_i, r)}(c): the point at distance max(0, d - r) from c toward a_i
    L gate(const L& c, int target) const {
        Num d = loc_dist(c, node_loc(target));
        if (d <= radius) return c;
        Num t = d - radius;
        int x;
        if (!c.is_node()) {
            const auto& e = s.sedges_[static_cast<size_t>(c.se)];
            Num clen = (*selen)[static_cast<size_t>(c.se)];
            Num via_a = c.off + node_dist(e.a, target);
            if (via_a == d) {
                if (t <= c.off) return normalize(L{-1, c.se, Num(c.off - t)});
                t -= c.off;
                x = e.a;
            } else {
                Num rest = clen - c.off;
                if (t <= rest) return normalize(L{-1, c.se, Num(c.off + t)});
                t -= rest;
                x = e.b;
            }
        } else {
            x = c.node;
        }
        while (t > Num{}) {
            int nx = s.toward_[static_cast<size_t>(target)][static_cast<size_t>(x)];
            int e = s.toward_edge_[static_cast<size_t>(target)][static_cast<size_t>(x)];
            Num elen = (*selen)[static_cast<size_t>(e)];
            if (t < elen) {
                Num off = s.sedges_[static_cast<size_t>(e)].a == x ? t : Num(elen - t);
                return L{-1, e, off};
            }
            t -= elen;
            x = nx;
        }
        return node_loc(x);
    }

    void gates(const L& c, std::vector<L>& out) const {
        out.clear();
        for (int an : s.a_node_) out.push_back(gate(c, an));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

    int final_count(const std::vector<L>& g, std::vector<char>* final_flags) const {
        size_t k = g.size();
        if (final_flags) final_flags->assign(k, 1);
        if (k <= 2) return static_cast<int>(k);
        std::vector<Num> d(k * k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j) d[i * k + j] = loc_dist(g[i], g[j]);
        auto dd = [&](size_t i, size_t j) -> const Num& { return i < j ? d[i * k + j] : d[j * k + i]; };
        int count = 0;
        for (size_t p = 0; p < k; ++p) {
            bool between = false;
            for (size_t i = 0; i < k && !between; ++i) {
                if (i == p) continue;
                for (size_t j = i + 1; j < k; ++j) {
                    if (j == p) continue;
                    if (Num(dd(i, p) + dd(p, j)) == dd(i, j)) {
                        between = true;
                        break;
                    }
                }
            }
            if (!between)
                ++count;
            else if (final_flags)
                (*final_flags)[p] = 0;
        }
        return count;
    }

    // anchors: every skeleton node, then the ball boundary points at this
    // radius, per edge in ascending offset order
    template <class F>
    void for_each_anchor(F&& f) const {
        for (size_t i = 0; i < s.nodes_.size(); ++i)
            if (!f(node_loc(static_cast<int>(i)))) return;
        std::vector<Num> cuts;
        for (size_t e = 0; e < s.sedges_.size(); ++e) {
            cuts.clear();
            const auto& ed = s.sedges_[e];
            Num elen = (*selen)[e];
            for (int an : s.a_node_) {
                Num pu = radius - node_dist(ed.a, an);
                if (Num{} < pu && pu < elen) cuts.push_back(pu);
                Num pv = elen - (radius - node_dist(ed.b, an));
                if (Num{} < pv && pv < elen) cuts.push_back(pv);
            }
            std::sort(cuts.begin(), cuts.end());
            cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
            for (const Num& off : cuts)
                if (!f(L{-1, static_cast<int>(e), off})) return;
        }
    }
};

namespace {

template <class Num>
int run_sweep(const SweepCtx<Num>& ctx, int early_limit) {
    int best = std::numeric_limits<int>::max();
    std::vector<Loc<Num>> g;
    ctx.for_each_anchor([&](const Loc<Num>& c) {
        ctx.gates(c, g);
        int cnt = ctx.final_count(g, nullptr);
        if (cnt < best) best = cnt;
        if (early_limit >= 0 && best <= early_limit) return false;
        if (best <= 1) return false;
        return true;
    });
    return best;
}

Int lcm_int(const Int& a, const Int& b) { return a / boost::multiprecision::gcd(a, b) * b; }

constexpr std::int64_t kIntGuard = std::int64_t(1) << 60;

} // namespace

CoverSolver::CoverSolver(const MetricTree& t, std::vector<TreePoint> a_set)
    : tree_(&t), a_(std::move(a_set)) {
    if (a_.empty()) throw Error(errc::empty_input, "width problem needs a nonempty sample");
    for (const auto& p : a_) t.check_point(p);

    Subtree hull = Subtree::hull(t, a_);
    hull_leaves_ = hull.tn_dimension();

    std::map<std::string, int> index;
    auto add_node = [&](const TreePoint& p) {
        std::string key = t.point_key(p);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(nodes_.size());
        nodes_.push_back(p);
        index.emplace(std::move(key), id);
        return id;
    };

    for (int v : hull.vertices()) add_node(t.vertex_point(v));
    for (const auto& [e, iv] : hull.cover()) {
        std::vector<Rat> cuts{iv.first, iv.second};
        for (const auto& p : a_)
            if (!p.is_vertex() && p.edge() == e) cuts.push_back(p.offset());
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        std::vector<int> ids;
        ids.reserve(cuts.size());
        for (const Rat& off : cuts) ids.push_back(add_node(t.edge_point_canonical(e, off)));
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            sedges_.push_back(SkelEdge{ids[i], ids[i + 1], cuts[i + 1] - cuts[i], e, cuts[i]});
    }

    size_t w = nodes_.size();
    sadj_.assign(w, {});
    for (size_t e = 0; e < sedges_.size(); ++e) {
        sadj_[static_cast<size_t>(sedges_[e].a)].emplace_back(static_cast<int>(e), sedges_[e].b);
        sadj_[static_cast<size_t>(sedges_[e].b)].emplace_back(static_cast<int>(e), sedges_[e].a);
    }

    dist_.assign(w, std::vector<Rat>(w, Rat(0)));
    toward_.assign(w, std::vector<int>(w, -1));
    toward_edge_.assign(w, std::vector<int>(w, -1));
    for (size_t src = 0; src < w; ++src) {
        // iterative DFS from src; toward_[src][x] = neighbor of x on the path x -> src
        std::vector<int> stack{static_cast<int>(src)};
        std::vector<char> seen(w, 0);
        seen[src] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [e, y] : sadj_[static_cast<size_t>(x)]) {
                if (seen[static_cast<size_t>(y)]) continue;
                seen[static_cast<size_t>(y)] = 1;
                toward_[src][static_cast<size_t>(y)] = x;
                toward_edge_[src][static_cast<size_t>(y)] = e;
                dist_[src][static_cast<size_t>(y)] =
                    dist_[src][static_cast<size_t>(x)] + sedges_[static_cast<size_t>(e)].len;
                stack.push_back(y);
            }
        }
    }

    a_node_.reserve(a_.size());
    for (const auto& p : a_) {
        auto it = index.find(t.point_key(p));
        a_node_.push_back(it->second);
    }

    dev_first_ = 0;
    for (const auto& p : a_) dev_first_ = rat_max(dev_first_, t.distance(a_.front(), p));

    base_den_ = 1;
    for (const auto& e : sedges_)
        base_den_ = lcm_int(base_den_, Int(boost::multiprecision::denominator(e.len)));
    Int max_scaled = 0;
    for (size_t i = 0; i < w; ++i)
        for (size_t j = 0; j < w; ++j) {
            Rat scaled = dist_[i][j] * Rat(base_den_);
            max_scaled = std::max(max_scaled, Int(boost::multiprecision::numerator(scaled)));
        }
    int_path_ok_ = max_scaled < (Int(1) << 40);
    if (int_path_ok_) {
        dist_base_.assign(w, std::vector<std::int64_t>(w, 0));
        for (size_t i = 0; i < w; ++i)
            for (size_t j = 0; j < w; ++j)
                dist_base_[i][j] = Int(dist_[i][j] * Rat(base_den_)).convert_to<std::int64_t>();
        selen_base_.reserve(sedges_.size());
        for (const auto& e : sedges_)
            selen_base_.push_back(Int(e.len * Rat(base_den_)).convert_to<std::int64_t>());
    }
}

int CoverSolver::sweep_count(const Rat& r, int early_limit) const {
    if (int_path_ok_) {
        const Int& num_r = boost::multiprecision::numerator(r);
        const Int& den_r = boost::multiprecision::denominator(r);
        Int g = boost::multiprecision::gcd(den_r, base_den_);
        Int factor = den_r / g;                 // scale = base_den * factor
        Int scaled_radius = num_r * (base_den_ / g);
        Int max_dist = 0;
        for (const auto& row : dist_base_)
            for (std::int64_t v : row) max_dist = std::max(max_dist, Int(v));
        if (factor > 0 && max_dist * factor < kIntGuard && scaled_radius < kIntGuard &&
            scaled_radius + max_dist * factor < kIntGuard) {
            SweepCtx<std::int64_t> ctx{*this, nullptr, nullptr, scaled_radius.convert_to<std::int64_t>(), {}, {}};
            std::int64_t f = factor.convert_to<std::int64_t>();
            ctx.dist_store = dist_base_;
            for (auto& row : ctx.dist_store)
                for (auto& v : row) v *= f;
            ctx.selen_store = selen_base_;
            for (auto& v : ctx.selen_store) v *= f;
            ctx.dist = &ctx.dist_store;
            ctx.selen = &ctx.selen_store;
            return run_sweep(ctx, early_limit);
        }
    }
    SweepCtx<Rat> ctx{*this, &dist_, nullptr, r, {}, {}};
    ctx.selen_store.reserve(sedges_.size());
    for (const auto& e : sedges_) ctx.selen_store.push_back(e.len);
    ctx.selen = &ctx.selen_store;
    return run_sweep(ctx, early_limit);
}

int CoverSolver::min_leaves(const Rat& r) const {
    if (r < 0) throw Error(errc::negative_radius, "radius " + rat_string(r));
    return sweep_count(r, -1);
}

bool CoverSolver::feasible(const Rat& r, int n) const {
    if (r < 0) throw Error(errc::negative_radius, "radius " + rat_string(r));
    return sweep_count(r, n) <= n;
}

Subtree CoverSolver::witness(const Rat& r, int n) const {
    SweepCtx<Rat> ctx{*this, &dist_, nullptr, r, {}, {}};
    ctx.selen_store.reserve(sedges_.size());
    for (const auto& e : sedges_) ctx.selen_store.push_back(e.len);
    ctx.selen = &ctx.selen_store;

    auto loc_point = [&](const Loc<Rat>& loc) {
        if (loc.is_node()) return nodes_[static_cast<size_t>(loc.node)];
        const auto& e = sedges_[static_cast<size_t>(loc.se)];
        return tree_->edge_point_canonical(e.orig_edge, e.orig_off_a + loc.off);
    };

    bool found = false;
    std::vector<std::string> best_key;
    std::vector<TreePoint> best_points;
    std::vector<Loc<Rat>> g;
    std::vector<char> flags;
    ctx.for_each_anchor([&](const Loc<Rat>& c) {
        ctx.gates(c, g);
        int cnt = ctx.final_count(g, &flags);
        if (cnt <= n) {
            std::vector<TreePoint> pts;
            std::vector<std::string> key;
            for (size_t i = 0; i < g.size(); ++i) {
                if (!flags[i]) continue;
                TreePoint p = loc_point(g[i]);
                pts.push_back(p);
                key.push_back(tree_->point_key(p));
            }
            std::sort(key.begin(), key.end());
            if (!found || key < best_key) {
                found = true;
                best_key = std::move(key);
                best_points = std::move(pts);
            }
        }
        return true;
    });
    if (!found)
        throw Error(errc::invalid_argument,
                    "no region with at most " + std::to_string(n) + " final points at radius " +
                        rat_string(r));
    return Subtree::hull(*tree_, best_points);
}

} // namespace mtw
