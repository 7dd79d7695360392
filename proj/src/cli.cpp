#include "mtw/cli.hpp"

#include "mtw/axioms.hpp"
#include "mtw/errors.hpp"
#include "mtw/io.hpp"
#include "mtw/radial.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mtw {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::parse_error, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string default_tolerance_literal() {
    if (const char* env = std::getenv("MTW_DEFAULT_TOLERANCE"); env && *env) return env;
    return "1e-9";
}

MetricTree load_tree(const std::string& tree_path, const std::string& newick_path) {
    if (!tree_path.empty() && !newick_path.empty())
        throw Error(errc::invalid_argument, "give either --tree or --newick, not both");
    if (!tree_path.empty()) return parse_tree_tsv(read_file(tree_path));
    if (!newick_path.empty()) return parse_newick(read_file(newick_path));
    throw Error(errc::invalid_argument, "a tree file is required (--tree or --newick)");
}

RadialPoint radial_from_json(const nlohmann::json& j) {
    std::vector<Rat> coords;
    for (const auto& c : j) {
        if (c.is_string())
            coords.push_back(parse_rational(c.get<std::string>()));
        else if (c.is_number_integer())
            coords.push_back(Rat(c.get<long long>()));
        else
            throw Error(errc::parse_error, "radial coordinates must be rational strings or integers");
    }
    return RadialPoint(coords);
}

struct Ctx {
    std::string tree_path, newick_path, points_path;
    std::string tolerance = default_tolerance_literal();
    std::string output = "json";
    bool echo_exact = false;

    void emit(std::ostream& out, nlohmann::json j, const std::string& plain) const {
        if (output == "plain") {
            out << plain << "\n";
        } else {
            j["schema"] = "1";
            out << j.dump(2) << "\n";
        }
    }

    // canonical-rational echo of the parsed inputs, on request
    void echo_tree(nlohmann::json& j, const MetricTree& t) const {
        if (!echo_exact) return;
        nlohmann::json edges = nlohmann::json::array();
        for (int e = 0; e < t.edge_count(); ++e) {
            const auto& ed = t.edge(e);
            edges.push_back(nlohmann::json::array(
                {t.vertex_name(ed.u), t.vertex_name(ed.v), rat_string(ed.length)}));
        }
        j["input"]["tree"] = std::move(edges);
    }
    void echo_points(nlohmann::json& j, const MetricTree& t,
                     const std::vector<TreePoint>& pts) const {
        if (!echo_exact) return;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : pts) arr.push_back(t.point_key(p));
        j["input"]["points"] = std::move(arr);
    }
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"metric tree widths: exact tree geometry, Tn-widths and compact widths"};
    app.name("mtw");
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    Ctx ctx;
    app.add_option("--output", ctx.output, "json or plain")
        ->check(CLI::IsMember({"json", "plain"}));
    app.add_flag("--echo-exact", ctx.echo_exact, "echo parsed inputs as exact rationals");

    auto add_tree_opts = [&](CLI::App* cmd) {
        cmd->add_option("--tree", ctx.tree_path, "edge list TSV: u v length");
        cmd->add_option("--newick", ctx.newick_path, "newick file with branch lengths");
    };
    auto add_points_opt = [&](CLI::App* cmd) {
        cmd->add_option("--points", ctx.points_path, "points file: 'V id' or 'E u v offset' lines")
            ->required();
    };

    // validate
    auto* c_validate = app.add_subcommand("validate", "parse a tree and replay the axioms");
    add_tree_opts(c_validate);
    std::uint64_t validate_seed = 0;
    c_validate->add_option("--seed", validate_seed, "axiom sampling seed");

    // hull / final-points / dimension
    auto* c_hull = app.add_subcommand("hull", "convex hull of a point set");
    add_tree_opts(c_hull);
    add_points_opt(c_hull);
    auto* c_final = app.add_subcommand("final-points", "final points of the hull of a point set");
    add_tree_opts(c_final);
    add_points_opt(c_final);
    auto* c_dim = app.add_subcommand("dimension", "Tn-dimension of the hull of a point set");
    add_tree_opts(c_dim);
    add_points_opt(c_dim);

    // width
    auto* c_width = app.add_subcommand("width", "Tn-width of a point set");
    add_tree_opts(c_width);
    add_points_opt(c_width);
    int width_n = 1;
    c_width->add_option("--n", width_n, "number of final points allowed")->required();
    c_width->add_option("--tolerance", ctx.tolerance, "bracket width, rational literal");

    // width-seq
    auto* c_seq = app.add_subcommand("width-seq", "Tn-width sequence for n = 1..n-max");
    add_tree_opts(c_seq);
    add_points_opt(c_seq);
    int seq_nmax = 1;
    c_seq->add_option("--n-max", seq_nmax, "last index")->required();
    c_seq->add_option("--tolerance", ctx.tolerance, "bracket width, rational literal");

    // compact-width
    auto* c_compact = app.add_subcommand("compact-width", "compact width of a point set");
    add_tree_opts(c_compact);
    add_points_opt(c_compact);

    // radial ball-width
    auto* c_radial = app.add_subcommand("radial", "the plane under the radial metric");
    c_radial->require_subcommand(1);
    auto* c_ball = c_radial->add_subcommand("ball-width", "Tn-width of the radial ball B_r");
    std::string ball_r = "1", ball_eps, ball_gens = "[]";
    int ball_n = 1;
    bool ball_open = false;
    c_ball->add_option("--r", ball_r, "ball radius, rational literal")->required();
    c_ball->add_option("--n", ball_n, "width index")->required();
    c_ball->add_flag("--open", ball_open, "open ball instead of closed");
    c_ball->add_option("--eps", ball_eps, "also build a lower-bound witness p_eps");
    c_ball->add_option("--generators", ball_gens,
                       "JSON array of radial points, e.g. [[\"1\",\"0\"],[\"0\",\"1\"]]");

    // p1-witness
    auto* c_p1 = app.add_subcommand("p1-witness", "ball-absorption witness z and its check");
    add_tree_opts(c_p1);
    std::string p1_x, p1_y, p1_eps = "1", p1_r = "1", p1_theta;
    int p1_samples = 1000;
    std::uint64_t p1_seed = 0;
    c_p1->add_option("--x", p1_x, "point, e.g. 'V u' or 'E u v 1/2'")->required();
    c_p1->add_option("--y", p1_y, "point")->required();
    c_p1->add_option("--eps", p1_eps, "epsilon > 0")->required();
    c_p1->add_option("--r", p1_r, "radius > 0")->required();
    c_p1->add_option("--theta", p1_theta, "run the membership check at this theta");
    c_p1->add_option("--samples", p1_samples, "membership samples");
    c_p1->add_option("--seed", p1_seed, "sampling seed");

    // check
    auto* c_check = app.add_subcommand("check", "run a named verification suite");
    std::string check_suite;
    RandomInstanceSpec check_spec;
    c_check->add_option("--suite", check_suite, "suite name")->required();
    c_check->add_option("--trials", check_spec.trials, "trial count");
    c_check->add_option("--seed", check_spec.seed, "base seed");
    c_check->add_option("--vmin", check_spec.min_vertices, "min vertex count");
    c_check->add_option("--vmax", check_spec.max_vertices, "max vertex count");
    std::string check_len_min = "1/4", check_len_max = "2", check_len_step = "1/4";
    c_check->add_option("--len-min", check_len_min, "shortest edge length");
    c_check->add_option("--len-max", check_len_max, "longest edge length");
    c_check->add_option("--len-step", check_len_step, "length grid step");
    c_check->add_option("--amin", check_spec.min_sample, "min |A|");
    c_check->add_option("--amax", check_spec.max_sample, "max |A|");

    // gen
    auto* c_gen = app.add_subcommand("gen", "generate a random tree");
    int gen_vertices = 8;
    std::uint64_t gen_seed = 0;
    std::string gen_len_min = "1/4", gen_len_max = "2", gen_len_step = "1/4";
    std::string gen_format = "tsv";
    c_gen->add_option("--vertices", gen_vertices, "vertex count")->required();
    c_gen->add_option("--seed", gen_seed, "generator seed");
    c_gen->add_option("--len-min", gen_len_min, "shortest edge length");
    c_gen->add_option("--len-max", gen_len_max, "longest edge length");
    c_gen->add_option("--len-step", gen_len_step, "length grid step");
    c_gen->add_option("--format", gen_format, "tsv or newick")
        ->check(CLI::IsMember({"tsv", "newick"}));

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_validate) {
            MetricTree t = load_tree(ctx.tree_path, ctx.newick_path);
            AxiomReport ar = check_tree_axioms(t, {}, validate_seed, 100);
            nlohmann::json j;
            j["op"] = "validate";
            j["vertices"] = t.vertex_count();
            j["edges"] = t.edge_count();
            j["total_length"] = rat_string(t.total_length());
            j["axioms_pass"] = ar.pass();
            ctx.emit(out, j, ar.pass() ? "ok" : "axioms failed");
            return ar.pass() ? 0 : 1;
        }
        if (*c_hull || *c_final || *c_dim) {
            MetricTree t = load_tree(ctx.tree_path, ctx.newick_path);
            std::vector<TreePoint> pts = parse_points(t, read_file(ctx.points_path));
            Subtree hull = Subtree::hull(t, pts);
            if (*c_hull) {
                nlohmann::json j = subtree_to_json(hull);
                j["op"] = "hull";
                ctx.echo_tree(j, t);
                ctx.echo_points(j, t, pts);
                ctx.emit(out, j, std::to_string(hull.tn_dimension()));
            } else if (*c_final) {
                nlohmann::json j;
                j["op"] = "final_points";
                j["final_points"] = nlohmann::json::array();
                std::string plain;
                for (const auto& p : hull.final_points()) {
                    j["final_points"].push_back(t.point_key(p));
                    plain += (plain.empty() ? "" : "\n") + t.point_key(p);
                }
                ctx.emit(out, j, plain);
            } else {
                nlohmann::json j;
                j["op"] = "tn_dimension";
                j["dimension"] = hull.tn_dimension();
                ctx.emit(out, j, std::to_string(hull.tn_dimension()));
            }
            return 0;
        }
        if (*c_width) {
            MetricTree t = load_tree(ctx.tree_path, ctx.newick_path);
            std::vector<TreePoint> pts = parse_points(t, read_file(ctx.points_path));
            WidthResult r = tn_width(WidthProblem{&t, pts, width_n}, parse_rational(ctx.tolerance));
            nlohmann::json j = width_result_to_json(r, t);
            j["op"] = "tn_width";
            j["n"] = width_n;
            j["tolerance"] = ctx.tolerance;
            ctx.echo_tree(j, t);
            ctx.echo_points(j, t, pts);
            ctx.emit(out, j, rat_string(r.value()));
            return 0;
        }
        if (*c_seq) {
            MetricTree t = load_tree(ctx.tree_path, ctx.newick_path);
            std::vector<TreePoint> pts = parse_points(t, read_file(ctx.points_path));
            auto seq = width_sequence(t, pts, seq_nmax, parse_rational(ctx.tolerance));
            nlohmann::json j;
            j["op"] = "width_sequence";
            j["n_max"] = seq_nmax;
            j["tolerance"] = ctx.tolerance;
            j["widths"] = nlohmann::json::array();
            std::string plain;
            for (size_t i = 0; i < seq.size(); ++i) {
                nlohmann::json w = width_result_to_json(seq[i], t);
                w["n"] = static_cast<int>(i + 1);
                w["tolerance"] = ctx.tolerance;
                j["widths"].push_back(w);
                plain += (i ? " " : "") + rat_string(seq[i].value());
            }
            ctx.emit(out, j, plain);
            return 0;
        }
        if (*c_compact) {
            MetricTree t = load_tree(ctx.tree_path, ctx.newick_path);
            std::vector<TreePoint> pts = parse_points(t, read_file(ctx.points_path));
            CompactWidthResult r = compact_width(t, pts);
            nlohmann::json j;
            j["op"] = "compact_width";
            j["value"] = rat_string(r.value);
            j["attained"] = r.attained;
            j["sequence_limit"] = rat_string(r.sequence_limit);
            j["witness"] = nlohmann::json::array();
            for (const auto& p : r.witness) j["witness"].push_back(t.point_key(p));
            ctx.emit(out, j, rat_string(r.value));
            return 0;
        }
        if (*c_ball) {
            RadialBall ball(parse_rational(ball_r), ball_open);
            BallWidthResult r = ball_width(ball, ball_n);
            nlohmann::json j;
            j["op"] = "ball_width";
            j["n"] = ball_n;
            j["r"] = rat_string(ball.radius);
            j["open"] = ball.open;
            if (ctx.echo_exact) j["input"]["r"] = rat_string(ball.radius);
            j["value"] = rat_string(r.value);
            j["upper_witness"] = r.upper_witness.key();
            if (!ball_eps.empty()) {
                std::vector<RadialPoint> gens;
                nlohmann::json gj = nlohmann::json::parse(ball_gens);
                for (const auto& g : gj) gens.push_back(radial_from_json(g));
                RadialPoint p =
                    ball_width_lower_bound_witness(ball, gens, parse_rational(ball_eps));
                j["lower_witness"] = p.key();
                j["lower_witness_norm_sq"] = rat_string(p.norm_sq());
                j["eps"] = ball_eps;
            }
            ctx.emit(out, j, rat_string(r.value));
            return 0;
        }
        if (*c_p1) {
            MetricTree t = load_tree(ctx.tree_path, ctx.newick_path);
            P1Witness w =
                p1_witness(t, t.parse_point(p1_x), t.parse_point(p1_y), parse_rational(p1_eps),
                           parse_rational(p1_r));
            nlohmann::json j;
            j["op"] = "p1_witness";
            j["x"] = t.point_key(w.x);
            j["y"] = t.point_key(w.y);
            j["eps"] = rat_string(w.epsilon);
            j["r"] = rat_string(w.radius);
            j["delta"] = rat_string(w.delta);
            j["z"] = t.point_key(w.z);
            int code = 0;
            if (!p1_theta.empty()) {
                P1Report pr = p1_check(t, w, parse_rational(p1_theta), p1_samples, p1_seed);
                j["check"] = {{"theta", p1_theta},
                              {"samples", pr.samples},
                              {"in_intersection", pr.in_intersection},
                              {"pass", pr.pass()},
                              {"violations", pr.violations}};
                code = pr.pass() ? 0 : 1;
            }
            ctx.emit(out, j, t.point_key(w.z));
            return code;
        }
        if (*c_check) {
            check_spec.len_min = parse_rational(check_len_min);
            check_spec.len_max = parse_rational(check_len_max);
            check_spec.len_step = parse_rational(check_len_step);
            SuiteReport r = run_suite(check_suite, check_spec);
            nlohmann::json j = suite_report_to_json(r);
            j["op"] = "check";
            ctx.emit(out, j, r.pass() ? "pass" : "fail");
            return r.pass() ? 0 : 1;
        }
        if (*c_gen) {
            RandomInstanceSpec spec;
            spec.min_vertices = spec.max_vertices = gen_vertices;
            spec.len_min = parse_rational(gen_len_min);
            spec.len_max = parse_rational(gen_len_max);
            spec.len_step = parse_rational(gen_len_step);
            spec.seed = gen_seed;
            MetricTree t = generate_random_tree(spec);
            out << (gen_format == "tsv" ? emit_tree_tsv(t) : emit_newick(t) + "\n");
            return 0;
        }
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "ParseError: " << e.what() << "\n";
        return 1;
    }
}

} // namespace mtw
