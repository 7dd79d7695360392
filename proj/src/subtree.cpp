#include "mtw/subtree.hpp"

#include "mtw/errors.hpp"

#include <algorithm>

namespace mtw {

Subtree Subtree::hull(const MetricTree& t, const std::vector<TreePoint>& points) {
    if (points.empty()) throw Error(errc::empty_input, "convex hull of empty point set");
    Subtree s(t);
    s.add_point(points.front());
    for (size_t i = 1; i < points.size(); ++i)
        s.add_segment(t.segment(points.front(), points[i]));
    s.canonicalize();
    return s;
}

Subtree Subtree::whole_tree(const MetricTree& t) {
    Subtree s(t);
    for (int e = 0; e < t.edge_count(); ++e) {
        s.cover_[e] = {Rat(0), t.edge(e).length};
        s.verts_.insert(t.edge(e).u);
        s.verts_.insert(t.edge(e).v);
    }
    s.canonicalize();
    return s;
}

void Subtree::add_point(const TreePoint& p) {
    tree_->check_point(p);
    if (p.is_vertex()) {
        verts_.insert(p.vertex());
    } else {
        auto it = cover_.find(p.edge());
        if (it == cover_.end())
            cover_[p.edge()] = {p.offset(), p.offset()};
        else {
            it->second.first = rat_min(it->second.first, p.offset());
            it->second.second = rat_max(it->second.second, p.offset());
        }
    }
}

void Subtree::add_segment(const MetricSegment& s) {
    add_point(s.x());
    add_point(s.y());
    for (int v : s.via()) verts_.insert(v);
    for (const auto& leg : s.legs()) {
        Rat lo = rat_min(leg.from, leg.to), hi = rat_max(leg.from, leg.to);
        auto it = cover_.find(leg.edge);
        if (it == cover_.end())
            cover_[leg.edge] = {lo, hi};
        else {
            it->second.first = rat_min(it->second.first, lo);
            it->second.second = rat_max(it->second.second, hi);
        }
    }
}

void Subtree::canonicalize() {
    for (auto it = cover_.begin(); it != cover_.end();) {
        const auto& e = tree_->edge(it->first);
        auto& [lo, hi] = it->second;
        if (lo == 0) verts_.insert(e.u);
        if (hi == e.length) verts_.insert(e.v);
        bool degenerate_at_end = lo == hi && (lo == 0 || hi == e.length);
        if (degenerate_at_end)
            it = cover_.erase(it); // the vertex set already holds it
        else
            ++it;
    }
}

bool Subtree::contains(const TreePoint& p) const {
    tree_->check_point(p);
    if (p.is_vertex()) return verts_.count(p.vertex()) > 0;
    auto it = cover_.find(p.edge());
    return it != cover_.end() && it->second.first <= p.offset() &&
           p.offset() <= it->second.second;
}

bool Subtree::is_single_point() const {
    return (verts_.size() == 1 && cover_.empty()) || (verts_.empty() && cover_.size() == 1 &&
           cover_.begin()->second.first == cover_.begin()->second.second);
}

std::vector<TreePoint> Subtree::final_points() const {
    std::vector<TreePoint> out;
    // interior interval endpoints
    for (const auto& [e, iv] : cover_) {
        const auto& ed = tree_->edge(e);
        if (iv.first > 0) out.push_back(tree_->edge_point_canonical(e, iv.first));
        if (iv.second < ed.length && iv.second != iv.first)
            out.push_back(tree_->edge_point_canonical(e, iv.second));
    }
    // covered vertices from which the region extends in at most one direction
    for (int v : verts_) {
        int dirs = 0;
        for (auto [e, w] : tree_->incident(v)) {
            auto it = cover_.find(e);
            if (it == cover_.end()) continue;
            const auto& ed = tree_->edge(e);
            const auto& [lo, hi] = it->second;
            if (lo == hi) continue;
            if (ed.u == v && lo == 0) ++dirs;
            if (ed.v == v && hi == ed.length) ++dirs;
        }
        if (dirs <= 1) out.push_back(tree_->vertex_point(v));
    }
    std::sort(out.begin(), out.end(),
              [&](const TreePoint& a, const TreePoint& b) { return tree_->point_less(a, b); });
    return out;
}

int Subtree::tn_dimension() const { return static_cast<int>(final_points().size()); }

TreePoint Subtree::anchor_point() const {
    if (!verts_.empty()) return tree_->vertex_point(*verts_.begin());
    return tree_->edge_point_canonical(cover_.begin()->first, cover_.begin()->second.first);
}

TreePoint Subtree::project(const TreePoint& p) const {
    if (contains(p)) return p;
    MetricSegment seg = tree_->segment(p, anchor_point());
    for (const auto& leg : seg.legs()) {
        auto it = cover_.find(leg.edge);
        if (it != cover_.end()) {
            const auto& [lo, hi] = it->second;
            // entry offset nearest to the leg's start, in walk direction
            if (leg.from <= leg.to) {
                Rat c = rat_max(leg.from, lo);
                if (c <= rat_min(leg.to, hi)) return tree_->edge_point_canonical(leg.edge, c);
            } else {
                Rat c = rat_min(leg.from, hi);
                if (c >= rat_max(leg.to, lo)) return tree_->edge_point_canonical(leg.edge, c);
            }
        }
        // vertex at the far end of this leg
        const auto& ed = tree_->edge(leg.edge);
        int endv = leg.to == 0 ? ed.u : (leg.to == ed.length ? ed.v : -1);
        if (endv >= 0 && verts_.count(endv)) return tree_->vertex_point(endv);
    }
    return seg.y(); // the anchor itself is in the region
}

Rat Subtree::distance_to(const TreePoint& p) const { return tree_->distance(p, project(p)); }

Rat Subtree::deviation(const std::vector<TreePoint>& a_set) const {
    if (a_set.empty()) throw Error(errc::empty_input, "deviation of empty point set");
    Rat worst(0);
    for (const auto& a : a_set) worst = rat_max(worst, distance_to(a));
    return worst;
}

bool Subtree::subset_of(const Subtree& o) const {
    for (int v : verts_)
        if (!o.verts_.count(v)) return false;
    for (const auto& [e, iv] : cover_) {
        auto it = o.cover_.find(e);
        if (it == o.cover_.end()) return false;
        if (iv.first < it->second.first || iv.second > it->second.second) return false;
    }
    return true;
}

std::vector<Subtree::EdgeCover> Subtree::edge_cover() const {
    std::vector<EdgeCover> out;
    out.reserve(cover_.size());
    for (const auto& [e, iv] : cover_) out.push_back(EdgeCover{e, iv.first, iv.second});
    return out;
}

void Subtree::validate() const {
    if (verts_.empty() && cover_.empty())
        throw Error(errc::invalid_argument, "empty region");
    // interval sanity and vertex consistency
    for (const auto& [e, iv] : cover_) {
        const auto& ed = tree_->edge(e);
        if (iv.first < 0 || iv.second > ed.length || iv.first > iv.second)
            throw Error(errc::invalid_argument, "bad interval");
        if (iv.first == 0 && !verts_.count(ed.u))
            throw Error(errc::invalid_argument, "interval reaches vertex not in set");
        if (iv.second == ed.length && !verts_.count(ed.v))
            throw Error(errc::invalid_argument, "interval reaches vertex not in set");
    }
    // connectivity: walk from anchor across covered structure
    if (!verts_.empty()) {
        std::set<int> seen;
        std::vector<int> stack{*verts_.begin()};
        seen.insert(*verts_.begin());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [e, w] : tree_->incident(v)) {
                auto it = cover_.find(e);
                if (it == cover_.end()) continue;
                const auto& ed = tree_->edge(e);
                if (it->second.first == 0 && it->second.second == ed.length && !seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        if (seen.size() != verts_.size())
            throw Error(errc::invalid_argument, "region is disconnected");
        // every partial interval must touch a covered vertex
        for (const auto& [e, iv] : cover_) {
            const auto& ed = tree_->edge(e);
            bool touches = (iv.first == 0 && seen.count(ed.u)) ||
                           (iv.second == ed.length && seen.count(ed.v));
            if (!touches) throw Error(errc::invalid_argument, "floating interval");
        }
    } else if (cover_.size() > 1) {
        throw Error(errc::invalid_argument, "multiple intervals without vertices");
    }
}

} // namespace mtw
