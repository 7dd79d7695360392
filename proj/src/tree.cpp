#include "mtw/tree.hpp"

#include "mtw/errors.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace mtw {

namespace {

std::atomic<std::uint64_t> next_serial{1};

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

} // namespace

MetricTree::MetricTree(const std::vector<EdgeInput>& edges) : serial_(next_serial++) {
    if (edges.empty()) throw Error(errc::empty_input, "edge list is empty");

    auto intern = [this](const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        index_.emplace(name, id);
        return id;
    };

    for (const auto& in : edges) {
        (void)intern(in.u);
        (void)intern(in.v);
    }
    adj_.resize(static_cast<size_t>(vertex_count()));

    DisjointSets dsu(vertex_count());
    total_length_ = 0;
    for (const auto& in : edges) {
        if (in.length <= 0)
            throw Error(errc::nonpositive_length,
                        "edge " + in.u + "-" + in.v + " has length " + rat_string(in.length));
        int a = intern(in.u), b = intern(in.v);
        if (a == b) throw Error(errc::cycle_detected, "self-loop at vertex " + in.u);
        int u = a, v = b;
        if (!(vertex_name(u) < vertex_name(v))) std::swap(u, v);
        if (find_edge(u, v) >= 0)
            throw Error(errc::duplicate_edge, "edge " + vertex_name(u) + "-" + vertex_name(v));
        if (!dsu.unite(a, b))
            throw Error(errc::cycle_detected, "edge " + in.u + "-" + in.v + " closes a cycle");
        int e = static_cast<int>(edges_.size());
        edges_.push_back(Edge{u, v, in.length});
        adj_[static_cast<size_t>(u)].emplace_back(e, v);
        adj_[static_cast<size_t>(v)].emplace_back(e, u);
        total_length_ += in.length;
    }

    // rooted index at vertex 0
    int n = vertex_count();
    parent_.assign(static_cast<size_t>(n), -1);
    parent_edge_.assign(static_cast<size_t>(n), -1);
    depth_.assign(static_cast<size_t>(n), 0);
    root_dist_.assign(static_cast<size_t>(n), Rat(0));
    std::vector<int> stack{0};
    std::vector<bool> seen(static_cast<size_t>(n), false);
    seen[0] = true;
    int visited = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++visited;
        for (auto [e, w] : adj_[static_cast<size_t>(u)]) {
            if (seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = true;
            parent_[static_cast<size_t>(w)] = u;
            parent_edge_[static_cast<size_t>(w)] = e;
            depth_[static_cast<size_t>(w)] = depth_[static_cast<size_t>(u)] + 1;
            root_dist_[static_cast<size_t>(w)] = root_dist_[static_cast<size_t>(u)] + edge(e).length;
            stack.push_back(w);
        }
    }
    if (visited != n) {
        for (int v = 0; v < n; ++v)
            if (!seen[static_cast<size_t>(v)])
                throw Error(errc::disconnected, "vertex " + vertex_name(v) + " is unreachable");
    }
}

int MetricTree::find_vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

int MetricTree::require_vertex(std::string_view name) const {
    int v = find_vertex(name);
    if (v < 0) throw Error(errc::point_not_on_tree, "unknown vertex '" + std::string(name) + "'");
    return v;
}

int MetricTree::find_edge(int a, int b) const {
    if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) return -1;
    for (auto [e, w] : adj_[static_cast<size_t>(a)])
        if (w == b) return e;
    return -1;
}

TreePoint MetricTree::vertex_point(int v) const {
    if (v < 0 || v >= vertex_count())
        throw Error(errc::point_not_on_tree, "vertex id out of range");
    TreePoint p;
    p.vertex_ = v;
    p.tree_serial_ = serial_;
    return p;
}

TreePoint MetricTree::vertex_point(std::string_view name) const {
    return vertex_point(require_vertex(name));
}

TreePoint MetricTree::edge_point(std::string_view u, std::string_view v,
                                 const Rat& offset_from_u) const {
    int a = require_vertex(u), b = require_vertex(v);
    int e = find_edge(a, b);
    if (e < 0)
        throw Error(errc::point_not_on_tree,
                    "no edge " + std::string(u) + "-" + std::string(v));
    Rat off = offset_from_u;
    if (edge(e).u != a) off = edge(e).length - off; // given from the larger-named end
    return edge_point_canonical(e, off);
}

TreePoint MetricTree::edge_point_canonical(int e, const Rat& offset) const {
    if (e < 0 || e >= edge_count()) throw Error(errc::point_not_on_tree, "edge id out of range");
    const Edge& ed = edge(e);
    if (offset < 0 || offset > ed.length)
        throw Error(errc::point_not_on_tree,
                    "offset " + rat_string(offset) + " outside [0," + rat_string(ed.length) +
                        "] on edge " + vertex_name(ed.u) + "-" + vertex_name(ed.v));
    if (offset == 0) return vertex_point(ed.u);
    if (offset == ed.length) return vertex_point(ed.v);
    TreePoint p;
    p.edge_ = e;
    p.offset_ = offset;
    p.tree_serial_ = serial_;
    return p;
}

void MetricTree::check_point(const TreePoint& p) const {
    if (p.tree_serial_ != serial_)
        throw Error(errc::point_not_on_tree, "point belongs to a different tree");
    if (p.is_vertex()) {
        if (p.vertex_ < 0 || p.vertex_ >= vertex_count())
            throw Error(errc::point_not_on_tree, "vertex id out of range");
    } else {
        if (p.edge_ < 0 || p.edge_ >= edge_count())
            throw Error(errc::point_not_on_tree, "edge id out of range");
        if (p.offset_ <= 0 || p.offset_ >= edge(p.edge_).length)
            throw Error(errc::point_not_on_tree, "edge offset not interior");
    }
}

std::string MetricTree::point_key(const TreePoint& p) const {
    check_point(p);
    if (p.is_vertex()) return "V " + vertex_name(p.vertex_);
    const Edge& e = edge(p.edge_);
    return "E " + vertex_name(e.u) + " " + vertex_name(e.v) + " " + rat_string(p.offset_);
}

bool MetricTree::point_less(const TreePoint& a, const TreePoint& b) const {
    return point_key(a) < point_key(b);
}

TreePoint MetricTree::parse_point(std::string_view line) const {
    std::istringstream in{std::string(line)};
    std::string tag;
    if (!(in >> tag)) throw Error(errc::parse_error, "empty point line");
    if (tag == "V") {
        std::string name;
        if (!(in >> name)) throw Error(errc::parse_error, "point line 'V' needs a vertex id");
        return vertex_point(name);
    }
    if (tag == "E") {
        std::string u, v, off;
        if (!(in >> u >> v >> off))
            throw Error(errc::parse_error, "point line 'E' needs: u v offset");
        return edge_point(u, v, parse_rational(off));
    }
    throw Error(errc::parse_error, "point line must start with 'V' or 'E', got '" + tag + "'");
}

TreePoint MetricTree::sample_point(std::mt19937_64& rng) const {
    const Int denom = Int(1) << 32;
    Int k = Int(rng() & 0xFFFFFFFFull);
    Rat target = total_length_ * Rat(k, denom);
    for (int e = 0; e < edge_count(); ++e) {
        if (target <= edge(e).length) return edge_point_canonical(e, target);
        target -= edge(e).length;
    }
    return vertex_point(edge(edge_count() - 1).v);
}

int MetricTree::lca(int a, int b) const {
    while (a != b) {
        if (depth_[static_cast<size_t>(a)] >= depth_[static_cast<size_t>(b)])
            a = parent_[static_cast<size_t>(a)];
        else
            b = parent_[static_cast<size_t>(b)];
    }
    return a;
}

Rat MetricTree::vertex_distance(int a, int b) const {
    if (a == b) return Rat(0);
    int c = lca(a, b);
    return root_dist_[static_cast<size_t>(a)] + root_dist_[static_cast<size_t>(b)] -
           2 * root_dist_[static_cast<size_t>(c)];
}

std::vector<int> MetricTree::vertex_path(int a, int b) const {
    int c = lca(a, b);
    std::vector<int> down;
    for (int x = a; x != c; x = parent_[static_cast<size_t>(x)]) down.push_back(x);
    down.push_back(c);
    std::vector<int> up;
    for (int x = b; x != c; x = parent_[static_cast<size_t>(x)]) up.push_back(x);
    down.insert(down.end(), up.rbegin(), up.rend());
    return down;
}

std::vector<int> MetricTree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (degree(v) <= 1) out.push_back(v);
    return out;
}

void MetricTree::anchors(const TreePoint& p, Anchor out[2], int& count) const {
    if (p.is_vertex()) {
        out[0] = Anchor{p.vertex_, Rat(0)};
        count = 1;
    } else {
        const Edge& e = edge(p.edge_);
        out[0] = Anchor{e.u, p.offset_};
        out[1] = Anchor{e.v, e.length - p.offset_};
        count = 2;
    }
}

Rat MetricTree::distance(const TreePoint& p, const TreePoint& q) const {
    check_point(p);
    check_point(q);
    if (p == q) return Rat(0);
    if (!p.is_vertex() && !q.is_vertex() && p.edge_ == q.edge_)
        return rat_abs(p.offset_ - q.offset_);
    Anchor ap[2], aq[2];
    int np = 0, nq = 0;
    anchors(p, ap, np);
    anchors(q, aq, nq);
    Rat best(-1);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < nq; ++j) {
            Rat d = ap[i].cost + vertex_distance(ap[i].vertex, aq[j].vertex) + aq[j].cost;
            if (best < 0 || d < best) best = d;
        }
    return best;
}

MetricSegment MetricTree::segment(const TreePoint& x, const TreePoint& y) const {
    check_point(x);
    check_point(y);
    MetricSegment s;
    s.x_ = x;
    s.y_ = y;
    if (x == y) {
        s.length_ = 0;
        if (x.is_vertex()) s.via_ = {x.vertex_};
        return s;
    }
    if (!x.is_vertex() && !y.is_vertex() && x.edge_ == y.edge_) {
        s.length_ = rat_abs(x.offset_ - y.offset_);
        s.legs_ = {SegmentLeg{x.edge_, x.offset_, y.offset_}};
        return s;
    }
    Anchor ax[2], ay[2];
    int nx = 0, ny = 0;
    anchors(x, ax, nx);
    anchors(y, ay, ny);
    Rat best(-1);
    int bi = 0, bj = 0;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            Rat d = ax[i].cost + vertex_distance(ax[i].vertex, ay[j].vertex) + ay[j].cost;
            if (best < 0 || d < best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    s.length_ = best;
    s.via_ = vertex_path(ax[bi].vertex, ay[bj].vertex);

    if (!x.is_vertex()) {
        const Edge& e = edge(x.edge_);
        Rat exit_off = (ax[bi].vertex == e.u) ? Rat(0) : e.length;
        s.legs_.push_back(SegmentLeg{x.edge_, x.offset_, exit_off});
    }
    for (size_t i = 0; i + 1 < s.via_.size(); ++i) {
        int a = s.via_[i], b = s.via_[i + 1];
        int e = find_edge(a, b);
        const Edge& ed = edge(e);
        if (ed.u == a)
            s.legs_.push_back(SegmentLeg{e, Rat(0), ed.length});
        else
            s.legs_.push_back(SegmentLeg{e, ed.length, Rat(0)});
    }
    if (!y.is_vertex()) {
        const Edge& e = edge(y.edge_);
        Rat entry_off = (ay[bj].vertex == e.u) ? Rat(0) : e.length;
        s.legs_.push_back(SegmentLeg{y.edge_, entry_off, y.offset_});
    }
    return s;
}

bool MetricTree::is_between(const TreePoint& x, const TreePoint& z, const TreePoint& y) const {
    return distance(x, y) == distance(x, z) + distance(z, y);
}

TreePoint MetricTree::median(const TreePoint& x, const TreePoint& y, const TreePoint& z) const {
    Rat g = (distance(x, y) + distance(x, z) - distance(y, z)) / 2;
    return point_along(segment(x, y), g);
}

TreePoint MetricTree::point_along(const MetricSegment& s, const Rat& dist_from_x) const {
    if (dist_from_x < 0 || dist_from_x > s.length_)
        throw Error(errc::invalid_argument,
                    "distance " + rat_string(dist_from_x) + " outside segment of length " +
                        rat_string(s.length_));
    Rat rem = dist_from_x;
    for (const auto& leg : s.legs_) {
        Rat span = rat_abs(leg.to - leg.from);
        if (rem <= span) {
            Rat off = leg.from + (leg.to >= leg.from ? rem : -rem);
            return edge_point_canonical(leg.edge, off);
        }
        rem -= span;
    }
    return s.y_;
}

bool MetricTree::segment_contains(const MetricSegment& s, const TreePoint& p) const {
    check_point(p);
    if (p == s.x_ || p == s.y_) return true;
    if (p.is_vertex()) {
        return std::find(s.via_.begin(), s.via_.end(), p.vertex_) != s.via_.end();
    }
    for (const auto& leg : s.legs_) {
        if (leg.edge != p.edge_) continue;
        const Rat& lo = leg.from <= leg.to ? leg.from : leg.to;
        const Rat& hi = leg.from <= leg.to ? leg.to : leg.from;
        if (lo <= p.offset_ && p.offset_ <= hi) return true;
    }
    return false;
}

} // namespace mtw
