#include "doctest.h"

#include "fixtures.hpp"
#include "mtw/cli.hpp"
#include "mtw/errors.hpp"
#include "mtw/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mtw;

TEST_CASE("TSV parsing and round-trip") {
    MetricTree t = parse_tree_tsv("# star\nc\tu\t1\nc\tv\t2\nc\tw\t3\n");
    CHECK(t.vertex_count() == 4);
    CHECK(t.distance(t.vertex_point("u"), t.vertex_point("w")) == Rat(4));
    CHECK(emit_tree_tsv(parse_tree_tsv(emit_tree_tsv(t))) == emit_tree_tsv(t));

    MetricTree r = parse_tree_tsv("a\tb\t3/2\nb\tc\t0.25\n");
    CHECK(r.edge(0).length == Rat(3, 2));
    CHECK(r.total_length() == Rat(7, 4));
    CHECK_THROWS_AS(parse_tree_tsv("a b\n"), Error);
}

TEST_CASE("newick parsing") {
    MetricTree t = parse_newick("(u:1,v:2,w:3)c;");
    CHECK(t.vertex_count() == 4);
    CHECK(t.distance(t.vertex_point("u"), t.vertex_point("w")) == Rat(4));
    CHECK(t.distance(t.vertex_point("v"), t.vertex_point("w")) == Rat(5));

    MetricTree p = parse_newick("(u:2)v;");
    CHECK(p.vertex_count() == 2);
    CHECK(p.distance(p.vertex_point("u"), p.vertex_point("v")) == Rat(2));

    CHECK_THROWS_WITH_AS(parse_newick("(u,v);"), doctest::Contains("MissingBranchLength"), Error);
    CHECK_THROWS_WITH_AS(parse_newick("(u:1,v:2"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_AS(parse_newick("(u:1,v:2)c"), Error); // missing ';'

    // nested structure with rational and decimal lengths
    MetricTree n = parse_newick("((a:1/2,b:0.5)x:2,c:1)r;");
    CHECK(n.vertex_count() == 5);
    CHECK(n.distance(n.vertex_point("a"), n.vertex_point("b")) == Rat(1));
    CHECK(n.distance(n.vertex_point("a"), n.vertex_point("c")) == Rat(7, 2));

    // anonymous internal vertices get synthesized names
    MetricTree anon = parse_newick("((a:1,b:1):1,c:1)r;");
    CHECK(anon.vertex_count() == 5);
}

TEST_CASE("newick round-trip") {
    MetricTree t = star3();
    MetricTree back = parse_newick(emit_newick(t));
    CHECK(emit_tree_tsv(back) == emit_tree_tsv(t));
}

TEST_CASE("points files") {
    MetricTree t = star3();
    auto pts = parse_points(t, "V u\n# tip\nV v\nE c w 3/2\n");
    REQUIRE(pts.size() == 3);
    CHECK(pts[2] == t.edge_point("c", "w", Rat(3, 2)));
    CHECK(emit_points(t, pts) == "V u\nV v\nE c w 3/2\n");
    CHECK_THROWS_AS(parse_points(t, "V q\n"), Error);
}

namespace {

struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() /
              ("mtw_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string file(const std::string& name, const std::string& content) const {
        auto p = dir / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }
};

int cli(const std::vector<std::string>& args, std::string* stdout_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (stdout_text) *stdout_text = out.str();
    return code;
}

} // namespace

TEST_CASE("cli width run matches the fixture") {
    TempDir tmp;
    std::string tree = tmp.file("star3.tsv", "c\tu\t1\nc\tv\t2\nc\tw\t3\n");
    std::string points = tmp.file("A.txt", "V u\nV v\nV w\n");

    std::string text;
    int code = cli({"width", "--tree", tree, "--points", points, "--n", "2"}, &text);
    CHECK(code == 0);
    auto j = nlohmann::json::parse(text);
    CHECK(j["hi"] == "1");
    CHECK(j["op"] == "tn_width");
    CHECK(j["n"] == 2);
    CHECK(j["schema"] == "1");
    CHECK(j["star_convention"] == false);
    CHECK(j["tolerance"] == "1e-9");
    CHECK(j["witness"]["final_points"].size() <= 2);

    // byte-identical output on identical input
    std::string again;
    cli({"width", "--tree", tree, "--points", points, "--n", "2"}, &again);
    CHECK(text == again);
}

TEST_CASE("cli radial ball-width returns the radius") {
    std::string text;
    CHECK(cli({"--output", "plain", "radial", "ball-width", "--r", "1", "--n", "5"}, &text) == 0);
    CHECK(text == "1\n");
    CHECK(cli({"radial", "ball-width", "--r", "5/2", "--n", "1"}, &text) == 0);
    CHECK(nlohmann::json::parse(text)["value"] == "5/2");
    CHECK(cli({"radial", "ball-width", "--r", "1", "--n", "2", "--eps", "1/4", "--generators",
               R"([["1","0"],["0","1"]])"},
              &text) == 0);
    CHECK(nlohmann::json::parse(text).contains("lower_witness"));
}

TEST_CASE("cli check suite exits zero on pass") {
    std::string text;
    int code = cli({"check", "--suite", "noninc", "--seed", "42", "--trials", "5"}, &text);
    CHECK(code == 0);
    auto j = nlohmann::json::parse(text);
    CHECK(j["pass"] == true);
    CHECK(j["trials"] == 5);

    CHECK(cli({"check", "--suite", "nope", "--trials", "1"}, &text) == 1);
}

TEST_CASE("cli misc paths") {
    TempDir tmp;
    std::string tree = tmp.file("p.tsv", "u\tv\t2\n");
    std::string points = tmp.file("pts.txt", "V u\nV v\n");
    std::string text;

    CHECK(cli({"validate", "--tree", tree}, &text) == 0);
    CHECK(nlohmann::json::parse(text)["axioms_pass"] == true);

    CHECK(cli({"dimension", "--tree", tree, "--points", points}, &text) == 0);
    CHECK(nlohmann::json::parse(text)["dimension"] == 2);

    CHECK(cli({"final-points", "--tree", tree, "--points", points}, &text) == 0);
    CHECK(nlohmann::json::parse(text)["final_points"] == nlohmann::json({"V u", "V v"}));

    CHECK(cli({"hull", "--tree", tree, "--points", points}, &text) == 0);

    CHECK(cli({"width-seq", "--tree", tree, "--points", points, "--n-max", "3"}, &text) == 0);
    auto seq = nlohmann::json::parse(text);
    CHECK(seq["widths"][0]["hi"] == "1");
    CHECK(seq["widths"][1]["hi"] == "0");

    CHECK(cli({"compact-width", "--tree", tree, "--points", points}, &text) == 0);
    CHECK(nlohmann::json::parse(text)["value"] == "0");

    CHECK(cli({"p1-witness", "--tree", tree, "--x", "V u", "--y", "V v", "--eps", "1/2", "--r",
               "1", "--theta", "1/8"},
              &text) == 0);
    CHECK(nlohmann::json::parse(text)["z"] == "E u v 1/4");

    std::string gen_text;
    CHECK(cli({"gen", "--vertices", "6", "--seed", "3"}, &gen_text) == 0);
    MetricTree g = parse_tree_tsv(gen_text);
    CHECK(g.vertex_count() == 6);

    // exit codes: domain error 1, usage error 2
    CHECK(cli({"width", "--tree", tree, "--points", tmp.file("bad.txt", "V zz\n"), "--n", "1"}) ==
          1);
    CHECK(cli({"width"}) == 2);
    CHECK(cli({"nope"}) == 2);
}

TEST_CASE("global flags may follow the subcommand and env overrides tolerance") {
    std::string text;
    CHECK(cli({"radial", "ball-width", "--r", "10", "--n", "1", "--output", "plain"}, &text) == 0);
    CHECK(text == "10\n");

    TempDir tmp;
    std::string tree = tmp.file("p.tsv", "u\tv\t2\n");
    std::string points = tmp.file("pts.txt", "V u\nV v\n");
    ::setenv("MTW_DEFAULT_TOLERANCE", "1/4", 1);
    CHECK(cli({"width", "--tree", tree, "--points", points, "--n", "1"}, &text) == 0);
    ::unsetenv("MTW_DEFAULT_TOLERANCE");
    auto j = nlohmann::json::parse(text);
    CHECK(j["tolerance"] == "1/4");
    CHECK(parse_rational(j["hi"].get<std::string>()) -
              parse_rational(j["lo"].get<std::string>()) <=
          Rat(1, 4));
}

TEST_CASE("echo-exact reflects parsed inputs canonically") {
    TempDir tmp;
    std::string tree = tmp.file("t.tsv", "a\tb\t0.5\nb\tc\t3/2\n");
    std::string points = tmp.file("pts.txt", "V a\nE b c 0.75\n");
    std::string text;
    CHECK(cli({"width", "--tree", tree, "--points", points, "--n", "1", "--echo-exact"},
              &text) == 0);
    auto j = nlohmann::json::parse(text);
    CHECK(j["input"]["tree"][0] == nlohmann::json({"a", "b", "1/2"})); // 0.5 -> 1/2
    CHECK(j["input"]["points"][1] == "E b c 3/4");                     // 0.75 -> 3/4
}
