#include "mtw/io.hpp"

#include "mtw/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace mtw {

namespace {

std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> out;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(line.substr(b));
    }
    return out;
}

} // namespace

MetricTree parse_tree_tsv(std::string_view text) {
    std::vector<EdgeInput> edges;
    for (const auto& line : content_lines(text)) {
        std::istringstream in(line);
        std::string u, v, len;
        if (!(in >> u >> v >> len))
            throw Error(errc::parse_error, "edge line needs: u v length, got '" + line + "'");
        edges.push_back(EdgeInput{u, v, parse_rational(len)});
    }
    return MetricTree(edges);
}

std::string emit_tree_tsv(const MetricTree& t) {
    std::string out;
    for (int e = 0; e < t.edge_count(); ++e) {
        const auto& ed = t.edge(e);
        out += t.vertex_name(ed.u) + "\t" + t.vertex_name(ed.v) + "\t" + rat_string(ed.length) +
               "\n";
    }
    return out;
}

// ---- Newick -----------------------------------------------------------------

namespace {

struct NewickParser {
    std::string_view text;
    size_t pos = 0;
    int anon = 0;
    std::vector<EdgeInput> edges;

    [[noreturn]] void bail(const std::string& what) const {
        throw Error(errc::parse_error,
                    what + " at position " + std::to_string(pos + 1));
    }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    std::string name_token() {
        skip_space();
        size_t b = pos;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(' || c == ')' || c == ',' || c == ':' || c == ';' ||
                std::isspace(static_cast<unsigned char>(c)))
                break;
            ++pos;
        }
        return std::string(text.substr(b, pos - b));
    }

    // returns the node's name; emits edges child->name
    std::string node() {
        skip_space();
        std::string name;
        if (peek() == '(') {
            ++pos;
            std::vector<std::pair<std::string, Rat>> children;
            while (true) {
                std::string child = node();
                skip_space();
                if (peek() != ':')
                    throw Error(errc::missing_branch_length,
                                "node '" + child + "' has no branch length (position " +
                                    std::to_string(pos + 1) + ")");
                ++pos;
                std::string lenstr = name_token();
                if (lenstr.empty()) bail("expected a branch length");
                children.emplace_back(child, parse_rational(lenstr));
                skip_space();
                if (peek() == ',') {
                    ++pos;
                    continue;
                }
                if (peek() == ')') {
                    ++pos;
                    break;
                }
                bail("expected ',' or ')'");
            }
            name = name_token();
            if (name.empty()) name = "_" + std::to_string(++anon);
            for (auto& [child, len] : children)
                edges.push_back(EdgeInput{name, child, len});
        } else {
            name = name_token();
            if (name.empty()) bail("expected a node name");
        }
        return name;
    }

    MetricTree parse() {
        node();
        skip_space();
        if (peek() != ';') bail("expected ';'");
        ++pos;
        skip_space();
        if (pos != text.size()) bail("trailing characters");
        if (edges.empty()) bail("tree has no branches");
        return MetricTree(edges);
    }
};

void emit_newick_node(const MetricTree& t, int v, int from, std::string& out) {
    std::vector<std::pair<int, int>> children;
    for (auto [e, w] : t.incident(v))
        if (w != from) children.emplace_back(e, w);
    if (!children.empty()) {
        out += "(";
        for (size_t i = 0; i < children.size(); ++i) {
            if (i) out += ",";
            emit_newick_node(t, children[i].second, v, out);
            out += ":" + rat_string(t.edge(children[i].first).length);
        }
        out += ")";
    }
    out += t.vertex_name(v);
}

} // namespace

MetricTree parse_newick(std::string_view text) {
    NewickParser p{text, 0, 0, {}};
    return p.parse();
}

std::string emit_newick(const MetricTree& t) {
    std::string out;
    emit_newick_node(t, 0, -1, out);
    out += ";";
    return out;
}

// ---- points -------------------------------------------------------------------

std::vector<TreePoint> parse_points(const MetricTree& t, std::string_view text) {
    std::vector<TreePoint> out;
    for (const auto& line : content_lines(text)) out.push_back(t.parse_point(line));
    return out;
}

std::string emit_points(const MetricTree& t, const std::vector<TreePoint>& pts) {
    std::string out;
    for (const auto& p : pts) out += t.point_key(p) + "\n";
    return out;
}

// ---- JSON ---------------------------------------------------------------------

nlohmann::json point_to_json(const MetricTree& t, const TreePoint& p) {
    return t.point_key(p);
}

nlohmann::json subtree_to_json(const Subtree& s) {
    const MetricTree& t = s.tree();
    nlohmann::json j;
    j["final_points"] = nlohmann::json::array();
    for (const auto& p : s.final_points()) j["final_points"].push_back(t.point_key(p));
    j["vertices"] = nlohmann::json::array();
    for (int v : s.vertices()) j["vertices"].push_back(t.vertex_name(v));
    j["edges"] = nlohmann::json::array();
    for (const auto& c : s.edge_cover()) {
        const auto& e = t.edge(c.edge);
        j["edges"].push_back(nlohmann::json{{"u", t.vertex_name(e.u)},
                                            {"v", t.vertex_name(e.v)},
                                            {"lo", rat_string(c.lo)},
                                            {"hi", rat_string(c.hi)}});
    }
    j["dimension"] = s.tn_dimension();
    return j;
}

nlohmann::json width_result_to_json(const WidthResult& r, const MetricTree& t) {
    nlohmann::json j;
    j["lo"] = rat_string(r.lo);
    j["hi"] = rat_string(r.hi);
    j["exact"] = r.exact;
    j["star_convention"] = r.star_convention_applied;
    j["tolerance"] = rat_string(r.tolerance);
    if (r.witness) {
        j["witness"] = nlohmann::json::object();
        j["witness"]["final_points"] = nlohmann::json::array();
        for (const auto& p : r.witness->final_points())
            j["witness"]["final_points"].push_back(t.point_key(p));
        j["witness_dimension"] = r.witness_dimension;
    }
    return j;
}

nlohmann::json suite_report_to_json(const SuiteReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["pass"] = r.pass();
    j["elapsed_ms"] = r.elapsed_ms;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : r.failures)
        j["failures"].push_back(nlohmann::json{
            {"trial", f.trial}, {"sub_seed", f.sub_seed}, {"what", f.what}});
    return j;
}

} // namespace mtw
