#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "gia/json_io.hpp"
#include "test_support.hpp"

using namespace gia;
using namespace giatest;

namespace {

const char* const kCli = GIA_CLI_PATH;
const char* const kFixtures = GIA_FIXTURES_DIR;

std::string fixture(const std::string& name) { return std::string(kFixtures) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CliResult gia_cli(const std::string& args) {
    return run_process(std::string(kCli) + " " + args);
}

const std::vector<std::string> kAllFixtures = {
    "o2.json",   "o3.json",    "ex54.json",     "ex34.json",  "ex51k.json",
    "chain.json", "dd.json",   "bv.json",       "edgeless2.json", "single.json"};

}  // namespace

TEST_CASE("parse_graph accepts the documented format") {
    Graph g = parse_graph(R"({"vertices":["z"],"edges":[{"src":"z","dst":"z","mult":2}]})");
    CHECK(g.vertex_ids() == std::vector<std::string>{"z"});
    CHECK(g.multiplicity(0, 0) == Multiplicity(2));
    Graph inf = parse_graph(R"({"vertices":["a","b"],"edges":[{"src":"a","dst":"b","mult":"inf"}]})");
    CHECK(inf.multiplicity(0, 1).is_infinite());
    Graph no_edges = parse_graph(R"({"vertices":["a"]})");
    CHECK(no_edges.edges().empty());
}

TEST_CASE("parse_graph sums duplicate edge entries") {
    Graph g = parse_graph(
        R"({"vertices":["a","b"],"edges":[
            {"src":"a","dst":"b","mult":1},
            {"src":"a","dst":"b","mult":3}]})");
    CHECK(g.multiplicity(0, 1) == Multiplicity(4));
    Graph h = parse_graph(
        R"({"vertices":["a"],"edges":[
            {"src":"a","dst":"a","mult":"inf"},
            {"src":"a","dst":"a","mult":5}]})");
    CHECK(h.multiplicity(0, 0).is_infinite());
}

TEST_CASE("parse_graph rejects malformed documents") {
    CHECK_THROWS_AS(parse_graph("not json"), ParseError);
    CHECK_THROWS_WITH(parse_graph("{\n\n  bad"), Catch::Matchers::ContainsSubstring("line 3"));
    CHECK_THROWS_AS(parse_graph("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"edges":[]})"), ParseError);
    CHECK_THROWS_WITH(parse_graph(R"({"vertices":[]})"),
                      Catch::Matchers::ContainsSubstring("empty"));
    CHECK_THROWS_AS(parse_graph(R"({"vertices":["a","a"]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[""]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[7]})"), ParseError);
    CHECK_THROWS_WITH(parse_graph(R"gia({"vertices":["beta(x)"]})gia"),
                      Catch::Matchers::ContainsSubstring("beta("));
}

TEST_CASE("parse_graph rejects bad edges") {
    CHECK_THROWS_WITH(
        parse_graph(R"({"vertices":["a"],"edges":[{"src":"a","dst":"q","mult":1}]})"),
        Catch::Matchers::ContainsSubstring("'q'"));
    CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[{"src":"a","dst":"a","mult":0}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[{"src":"a","dst":"a","mult":-2}]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_graph(R"({"vertices":["a"],"edges":[{"src":"a","dst":"a","mult":1.5}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_graph(R"({"vertices":["a"],"edges":[{"src":"a","dst":"a","mult":"lots"}]})"),
        ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[{"src":"a","mult":1}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[3]})"), ParseError);
}

TEST_CASE("emit then parse round-trips every fixture") {
    for (const std::string& name : kAllFixtures) {
        Graph parsed = parse_graph(slurp(fixture(name)));
        Graph reparsed = parse_graph(graph_document(parsed).dump(2));
        CHECK(graphs_equal(parsed, reparsed));
    }
}

TEST_CASE("cli: check report on the double loop") {
    CliResult r = gia_cli("check " + fixture("o2.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "{\n"
          "  \"row_finite\": true,\n"
          "  \"condition_K\": true,\n"
          "  \"condition_L\": true,\n"
          "  \"simple\": true,\n"
          "  \"primitive\": true\n"
          "}\n");
}

TEST_CASE("cli: ideals banner appears exactly when condition (K) holds") {
    CliResult with = gia_cli("ideals " + fixture("ex34.json"));
    CHECK(with.exit_code == 0);
    CHECK(with.output.find("banner") != std::string::npos);
    CHECK(with.output.find("every ideal of C*(E) is gauge-invariant") != std::string::npos);
    CHECK(with.output.find("\"complete\": true") != std::string::npos);

    CliResult without = gia_cli("ideals " + fixture("ex54.json"));
    CHECK(without.exit_code == 0);
    CHECK(without.output.find("banner") == std::string::npos);
    CHECK(without.output.find("\"complete\": false") != std::string::npos);
}

TEST_CASE("cli: quotient emits the grafted-sink document") {
    CliResult r = gia_cli("quotient " + fixture("ex34.json") + " --h h");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["vertices"] ==
          nlohmann::json({"t", "w", "v", "u", "beta(v)"}));
    REQUIRE(doc["edges"].size() == 6);
    int into_beta = 0;
    for (const auto& edge : doc["edges"]) {
        CHECK(edge["src"] != "beta(v)");  // grafted vertex is a sink
        if (edge["dst"] == "beta(v)") {
            ++into_beta;
            CHECK(edge["mult"] == 1);
        }
    }
    CHECK(into_beta == 2);

    // removing the grafted sink through B
    CliResult rb = gia_cli("quotient " + fixture("ex34.json") + " --h h --b v");
    CHECK(rb.exit_code == 0);
    auto doc_b = nlohmann::json::parse(rb.output);
    CHECK(doc_b["vertices"] == nlohmann::json({"t", "w", "v", "u"}));
    CHECK(doc_b["edges"].size() == 4);
}

TEST_CASE("cli: primitive report fields") {
    CliResult r = gia_cli("primitive " + fixture("ex54.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"maximal_tails\"") != std::string::npos);
    CHECK(r.output.find("\"gauge_invariant_primitive_ideals\"") != std::string::npos);
    CHECK(r.output.find("\"breaking_vertices\": []") != std::string::npos);
    CHECK(r.output.find("\"complete\": false") != std::string::npos);
}

TEST_CASE("cli: ktheory subjects and flags") {
    CliResult algebra = gia_cli("ktheory " + fixture("o3.json"));
    CHECK(algebra.exit_code == 0);
    CHECK(algebra.output.find("\"torsion\": [\n      2\n    ]") != std::string::npos);
    CliResult conflict =
        gia_cli("ktheory " + fixture("ex54.json") + " --ideal-h v,w --quotient-h w");
    CHECK(conflict.exit_code == 1);
    CliResult dangling = gia_cli("ktheory " + fixture("ex54.json") + " --quotient-b w");
    CHECK(dangling.exit_code == 1);
    CliResult zero = gia_cli("ktheory " + fixture("ex54.json") + " --ideal-h ''");
    CHECK(zero.exit_code == 1);
}

TEST_CASE("cli: exit codes") {
    CHECK(gia_cli("check /no/such/file.json").exit_code == 1);
    CHECK(gia_cli("nonsense").exit_code == 1);
    CHECK(gia_cli("").exit_code == 1);
    CHECK(gia_cli("ideals " + fixture("chain.json") + " --max-vertices 2").exit_code == 2);
    CHECK(gia_cli("quotient " + fixture("ex54.json") + " --h v").exit_code == 1);
    CHECK(gia_cli("hereditary " + fixture("ex54.json") + " --closure zz").exit_code == 1);
    CHECK(gia_cli("--help").exit_code == 0);
    CHECK(gia_cli("quotient --help").exit_code == 0);
}

TEST_CASE("cli: dot file output") {
    std::string dot_path = "/tmp/gia_test_hasse.dot";
    CliResult r = gia_cli("ideals " + fixture("ex54.json") + " --dot " + dot_path);
    CHECK(r.exit_code == 0);
    std::string dot = slurp(dot_path);
    CHECK(dot.find("digraph ideal_lattice") == 0);
    CHECK(dot.find("\"J{w|}\" -> \"J{v,w|}\";") != std::string::npos);
}
