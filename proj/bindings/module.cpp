#include "mtw/axioms.hpp"
#include "mtw/errors.hpp"
#include "mtw/harness.hpp"
#include "mtw/io.hpp"
#include "mtw/radial.hpp"
#include "mtw/subtree.hpp"
#include "mtw/widths.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mtw;

namespace {

// rationals cross the boundary as exact strings
Rat rat_arg(const py::object& o) {
    if (py::isinstance<py::int_>(o)) return Rat(Int(py::str(o).cast<std::string>()));
    if (py::isinstance<py::str>(o)) return parse_rational(o.cast<std::string>());
    throw Error(errc::invalid_argument, "rationals must be strings like '3/2' or integers");
}

RadialPoint radial_point_arg(const py::sequence& coords) {
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(py::len(coords)));
    for (const auto& item : coords) c.push_back(rat_arg(py::reinterpret_borrow<py::object>(item)));
    return RadialPoint(c);
}

py::dict width_result_dict(const MetricTree& t, const WidthResult& r) {
    py::dict d;
    d["lo"] = rat_string(r.lo);
    d["hi"] = rat_string(r.hi);
    d["value"] = rat_string(r.value());
    d["exact"] = r.exact;
    d["star_convention"] = r.star_convention_applied;
    d["witness_dimension"] = r.witness_dimension;
    py::list fps;
    if (r.witness)
        for (const auto& p : r.witness->final_points()) fps.append(t.point_key(p));
    d["witness_final_points"] = fps;
    return d;
}

} // namespace

PYBIND11_MODULE(mtw, m) {
    m.doc() = "exact metric-tree geometry, Tn-widths and compact widths";

    py::register_exception<Error>(m, "MtwError", PyExc_ValueError);

    py::class_<TreePoint>(m, "TreePoint")
        .def("__eq__", [](const TreePoint& a, const TreePoint& b) { return a == b; })
        .def("is_vertex", &TreePoint::is_vertex);

    py::class_<MetricSegment>(m, "MetricSegment")
        .def_property_readonly("length", [](const MetricSegment& s) { return rat_string(s.length()); });

    py::class_<Subtree>(m, "Subtree")
        .def("contains", &Subtree::contains)
        .def("final_points", &Subtree::final_points)
        .def("dimension", &Subtree::tn_dimension)
        .def("project", &Subtree::project)
        .def("distance_to",
             [](const Subtree& s, const TreePoint& p) { return rat_string(s.distance_to(p)); })
        .def("deviation", [](const Subtree& s, const std::vector<TreePoint>& a) {
            return rat_string(s.deviation(a));
        });

    py::class_<MetricTree>(m, "MetricTree")
        .def(py::init([](const std::vector<std::tuple<std::string, std::string, py::object>>& edges) {
                 std::vector<EdgeInput> in;
                 in.reserve(edges.size());
                 for (const auto& [u, v, len] : edges) in.push_back(EdgeInput{u, v, rat_arg(len)});
                 return MetricTree(in);
             }),
             py::arg("edges"), "build from (u, v, length) triples; lengths are rational strings")
        .def_property_readonly("vertex_count", &MetricTree::vertex_count)
        .def_property_readonly("edge_count", &MetricTree::edge_count)
        .def_property_readonly("total_length",
                               [](const MetricTree& t) { return rat_string(t.total_length()); })
        .def("vertex", [](const MetricTree& t, const std::string& name) { return t.vertex_point(name); })
        .def("edge_point",
             [](const MetricTree& t, const std::string& u, const std::string& v,
                const py::object& off) { return t.edge_point(u, v, rat_arg(off)); })
        .def("point", [](const MetricTree& t, const std::string& key) { return t.parse_point(key); })
        .def("point_key", &MetricTree::point_key)
        .def("distance",
             [](const MetricTree& t, const TreePoint& p, const TreePoint& q) {
                 return rat_string(t.distance(p, q));
             })
        .def("segment", &MetricTree::segment)
        .def("segment_contains", &MetricTree::segment_contains)
        .def("is_between", &MetricTree::is_between)
        .def("median", &MetricTree::median)
        .def("hull", [](const MetricTree& t, const std::vector<TreePoint>& pts) {
            return Subtree::hull(t, pts);
        })
        .def("check_axioms",
             [](const MetricTree& t, std::uint64_t seed, int count) {
                 AxiomReport r = check_tree_axioms(t, {}, seed, count);
                 py::dict d;
                 d["pass"] = r.pass();
                 py::list fails;
                 for (const auto& f : r.failures) fails.append(f.kind + ": " + f.detail);
                 d["failures"] = fails;
                 return d;
             },
             py::arg("seed") = 0, py::arg("count") = 100)
        .def("to_tsv", [](const MetricTree& t) { return emit_tree_tsv(t); })
        .def("to_newick", [](const MetricTree& t) { return emit_newick(t); });

    m.def("parse_tree_tsv", [](const std::string& s) { return parse_tree_tsv(s); });
    m.def("parse_newick", [](const std::string& s) { return parse_newick(s); });
    m.def("parse_points", [](const MetricTree& t, const std::string& s) {
        return parse_points(t, s);
    });

    m.def(
        "min_leaves_cover",
        [](const MetricTree& t, const std::vector<TreePoint>& a, const py::object& r) {
            return min_leaves_cover(t, a, rat_arg(r));
        },
        py::arg("tree"), py::arg("points"), py::arg("radius"));

    m.def(
        "tn_width",
        [](const MetricTree& t, const std::vector<TreePoint>& a, int n, const py::object& tol) {
            WidthResult r = tn_width(WidthProblem{&t, a, n}, rat_arg(tol));
            return width_result_dict(t, r);
        },
        py::arg("tree"), py::arg("points"), py::arg("n"), py::arg("tolerance") = py::str("1e-9"));

    m.def(
        "width_sequence",
        [](const MetricTree& t, const std::vector<TreePoint>& a, int n_max, const py::object& tol) {
            py::list out;
            for (const auto& r : width_sequence(t, a, n_max, rat_arg(tol)))
                out.append(width_result_dict(t, r));
            return out;
        },
        py::arg("tree"), py::arg("points"), py::arg("n_max"), py::arg("tolerance") = py::str("1e-9"));

    m.def(
        "chebyshev_radius",
        [](const MetricTree& t, const std::vector<TreePoint>& a) {
            auto [r, c] = chebyshev_radius(t, a);
            return py::make_tuple(rat_string(r), c);
        },
        py::arg("tree"), py::arg("points"));

    m.def(
        "brute_force_tn_width",
        [](const MetricTree& t, const std::vector<TreePoint>& a, int n, const py::object& res) {
            BruteForceResult r = brute_force_tn_width(t, a, n, rat_arg(res));
            return py::make_tuple(rat_string(r.value), r.witness);
        },
        py::arg("tree"), py::arg("points"), py::arg("n"), py::arg("resolution"));

    m.def(
        "compact_width",
        [](const MetricTree& t, const std::vector<TreePoint>& a) {
            CompactWidthResult r = compact_width(t, a);
            py::dict d;
            d["value"] = rat_string(r.value);
            d["attained"] = r.attained;
            d["sequence_limit"] = rat_string(r.sequence_limit);
            py::list w;
            for (const auto& p : r.witness) w.append(t.point_key(p));
            d["witness"] = w;
            return d;
        },
        py::arg("tree"), py::arg("points"));

    m.def(
        "p1_witness",
        [](const MetricTree& t, const TreePoint& x, const TreePoint& y, const py::object& eps,
           const py::object& r) {
            P1Witness w = p1_witness(t, x, y, rat_arg(eps), rat_arg(r));
            py::dict d;
            d["delta"] = rat_string(w.delta);
            d["z"] = t.point_key(w.z);
            return d;
        },
        py::arg("tree"), py::arg("x"), py::arg("y"), py::arg("eps"), py::arg("r"));

    m.def(
        "p1_check",
        [](const MetricTree& t, const TreePoint& x, const TreePoint& y, const py::object& eps,
           const py::object& r, const py::object& theta, int samples, std::uint64_t seed) {
            P1Witness w = p1_witness(t, x, y, rat_arg(eps), rat_arg(r));
            P1Report rep = p1_check(t, w, rat_arg(theta), samples, seed);
            py::dict d;
            d["pass"] = rep.pass();
            d["samples"] = rep.samples;
            d["in_intersection"] = rep.in_intersection;
            d["violations"] = rep.violations;
            return d;
        },
        py::arg("tree"), py::arg("x"), py::arg("y"), py::arg("eps"), py::arg("r"),
        py::arg("theta"), py::arg("samples") = 1000, py::arg("seed") = 0);

    // radial space
    py::class_<RadialPoint>(m, "RadialPoint")
        .def(py::init([](const py::sequence& coords) { return radial_point_arg(coords); }))
        .def_property_readonly("dim", &RadialPoint::dim)
        .def_property_readonly("norm_sq",
                               [](const RadialPoint& p) { return rat_string(p.norm_sq()); })
        .def("key", &RadialPoint::key)
        .def("__eq__", [](const RadialPoint& a, const RadialPoint& b) { return a == b; });

    m.def("radial_distance", [](const py::sequence& x, const py::sequence& y) {
        RadicalSum d = radial_distance(radial_point_arg(x), radial_point_arg(y));
        return py::make_tuple(d.exact_string(), d.to_double());
    });
    m.def("radial_is_between", [](const py::sequence& x, const py::sequence& z,
                                  const py::sequence& y) {
        return radial_is_between(radial_point_arg(x), radial_point_arg(z), radial_point_arg(y));
    });
    m.def(
        "ball_width",
        [](const py::object& r, int n, bool open) {
            return rat_string(ball_width(RadialBall(rat_arg(r), open), n).value);
        },
        py::arg("r"), py::arg("n"), py::arg("open") = false);
    m.def(
        "ball_width_lower_bound_witness",
        [](const py::object& r, const std::vector<py::sequence>& gens, const py::object& eps,
           int dimension, bool open) {
            std::vector<RadialPoint> g;
            g.reserve(gens.size());
            for (const auto& s : gens) g.push_back(radial_point_arg(s));
            RadialPoint p =
                ball_width_lower_bound_witness(RadialBall(rat_arg(r), open), g, rat_arg(eps), dimension);
            py::list coords;
            for (const auto& c : p.coords()) coords.append(rat_string(c));
            return coords;
        },
        py::arg("r"), py::arg("generators"), py::arg("eps"), py::arg("dimension") = 2,
        py::arg("open") = false);

    // harness
    m.def(
        "run_suite",
        [](const std::string& name, int trials, std::uint64_t seed, int min_vertices,
           int max_vertices) {
            RandomInstanceSpec spec;
            spec.trials = trials;
            spec.seed = seed;
            spec.min_vertices = min_vertices;
            spec.max_vertices = max_vertices;
            SuiteReport r = run_suite(name, spec);
            py::dict d;
            d["suite"] = r.suite;
            d["trials"] = r.trials;
            d["pass"] = r.pass();
            d["seed"] = r.seed;
            py::list fails;
            for (const auto& f : r.failures) fails.append(f.what);
            d["failures"] = fails;
            return d;
        },
        py::arg("name"), py::arg("trials") = 200, py::arg("seed") = 0,
        py::arg("min_vertices") = 2, py::arg("max_vertices") = 8);

    m.def("suite_names", [] { return suite_names(); });

    m.def(
        "generate_random_tree",
        [](int vertices, std::uint64_t seed) {
            RandomInstanceSpec spec;
            spec.min_vertices = spec.max_vertices = vertices;
            spec.seed = seed;
            return generate_random_tree(spec);
        },
        py::arg("vertices"), py::arg("seed") = 0);
}
