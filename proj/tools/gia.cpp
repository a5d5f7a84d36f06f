// gia: combinatorial invariants of graph C*-algebras from the command line.
// Reads a graph JSON document, writes deterministic JSON reports to stdout.
// Exit codes: 0 success, 1 invalid input or arguments, 2 enumeration limit.

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gia/graph.hpp"
#include "gia/hereditary.hpp"
#include "gia/ideals.hpp"
#include "gia/json_io.hpp"
#include "gia/ktheory.hpp"
#include "gia/primitive.hpp"

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gia::ParseError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

gia::Graph load_graph(const std::string& path) { return gia::parse_graph(slurp(path)); }

// Comma-separated vertex names; the empty string is the empty set.
std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

ordered_json names_json(const gia::Graph& g, const gia::VertexSet& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& name : s.names(g)) arr.push_back(name);
    return arr;
}

ordered_json ideal_json(const gia::Graph& g, const gia::Ideal& ideal) {
    ordered_json j;
    j["h"] = names_json(g, ideal.h);
    j["b"] = names_json(g, ideal.b);
    return j;
}

ordered_json group_json(const gia::AbelianGroup& group) {
    ordered_json j;
    j["torsion"] = ordered_json::array();
    for (const gia::BigInt& d : group.torsion) {
        if (d <= gia::BigInt(std::numeric_limits<std::uint64_t>::max()))
            j["torsion"].push_back(d.convert_to<std::uint64_t>());
        else
            j["torsion"].push_back(d.str());
    }
    j["free_rank"] = group.free_rank;
    return j;
}

void emit(const ordered_json& report) { std::cout << report.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file '" + path + "'");
    out << contents;
}

int run_check(const std::string& file) {
    gia::Graph g = load_graph(file);
    ordered_json out;
    out["row_finite"] = gia::is_row_finite(g);
    out["condition_K"] = gia::satisfies_condition_k(g);
    out["condition_L"] = gia::loops_have_exits_within(g, gia::VertexSet::full(g));
    out["simple"] = gia::is_simple_algebra(g);
    out["primitive"] = gia::is_primitive_algebra(g);
    emit(out);
    return 0;
}

int run_hereditary(const std::string& file, int max_vertices, bool closure_given,
                   const std::string& closure_csv) {
    gia::Graph g = load_graph(file);
    ordered_json out;
    out["saturated_hereditary"] = ordered_json::array();
    for (const gia::VertexSet& h : gia::saturated_hereditary_sets(g, max_vertices)) {
        ordered_json item;
        item["set"] = names_json(g, h);
        item["breaking_vertices"] = names_json(g, gia::breaking_vertices_of(g, h));
        out["saturated_hereditary"].push_back(std::move(item));
    }
    if (closure_given) {
        gia::VertexSet x = gia::VertexSet::named(g, split_names(closure_csv));
        ordered_json item;
        item["of"] = names_json(g, x);
        item["result"] = names_json(g, gia::hereditary_saturated_closure(g, x));
        out["closure"] = std::move(item);
    }
    emit(out);
    return 0;
}

int run_ideals(const std::string& file, int max_vertices, const std::string& dot_path) {
    gia::Graph g = load_graph(file);
    bool condition_k = gia::satisfies_condition_k(g);
    std::vector<gia::Ideal> ideals = gia::gauge_invariant_ideals(g, max_vertices);
    ordered_json out;
    if (condition_k)
        out["banner"] =
            "Condition (K) holds: every ideal of C*(E) is gauge-invariant, "
            "so this list is complete.";
    out["complete"] = condition_k;
    out["count"] = ideals.size();
    out["ideals"] = ordered_json::array();
    for (const gia::Ideal& ideal : ideals) out["ideals"].push_back(ideal_json(g, ideal));
    if (!dot_path.empty()) write_file(dot_path, gia::hasse_dot(g, ideals));
    emit(out);
    return 0;
}

int run_primitive(const std::string& file, int max_vertices) {
    gia::Graph g = load_graph(file);
    ordered_json out;
    out["maximal_tails"] = ordered_json::array();
    for (const gia::VertexSet& m : gia::maximal_tails(g, max_vertices)) {
        ordered_json item;
        item["tail"] = names_json(g, m);
        item["loops_have_exits"] = gia::loops_have_exits_within(g, m);
        out["maximal_tails"].push_back(std::move(item));
    }
    out["breaking_vertices"] = names_json(g, gia::breaking_vertices(g));
    out["gauge_invariant_primitive_ideals"] = ordered_json::array();
    for (const gia::Ideal& ideal : gia::gauge_invariant_primitive_ideals(g, max_vertices))
        out["gauge_invariant_primitive_ideals"].push_back(ideal_json(g, ideal));
    out["complete"] = gia::satisfies_condition_k(g);
    emit(out);
    return 0;
}

int run_quotient(const std::string& file, const std::string& h_csv,
                 const std::string& b_csv) {
    gia::Graph g = load_graph(file);
    gia::Ideal ideal = gia::make_ideal(g, gia::VertexSet::named(g, split_names(h_csv)),
                                       gia::VertexSet::named(g, split_names(b_csv)));
    emit(gia::graph_document(gia::quotient_graph(g, ideal)));
    return 0;
}

int run_ktheory(const std::string& file, bool ideal_given, const std::string& ideal_csv,
                bool quotient_given, const std::string& quotient_h_csv,
                bool quotient_b_given, const std::string& quotient_b_csv) {
    gia::Graph g = load_graph(file);
    if (ideal_given && quotient_given)
        throw std::invalid_argument("choose one of --ideal-h and --quotient-h");
    if (quotient_b_given && !quotient_given)
        throw std::invalid_argument("--quotient-b needs --quotient-h");
    gia::KGroups groups;
    ordered_json out;
    if (ideal_given) {
        gia::VertexSet h = gia::VertexSet::named(g, split_names(ideal_csv));
        groups = gia::k_groups_of_ideal(g, h);
        out["subject"] = ordered_json{{"ideal_h", names_json(g, h)}};
    } else if (quotient_given) {
        gia::Ideal ideal =
            gia::make_ideal(g, gia::VertexSet::named(g, split_names(quotient_h_csv)),
                            gia::VertexSet::named(g, split_names(quotient_b_csv)));
        groups = gia::k_groups_of_quotient(g, ideal);
        out["subject"] = ordered_json{{"quotient_h", names_json(g, ideal.h)},
                                      {"quotient_b", names_json(g, ideal.b)}};
    } else {
        groups = gia::k_groups(g);
        out["subject"] = "algebra";
    }
    out["K0"] = group_json(groups.k0);
    out["K1"] = group_json(groups.k1);
    emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial invariants of graph C*-algebras"};
    app.require_subcommand(1);

    std::string file;
    int max_vertices = gia::kDefaultMaxVertices;
    std::string closure_csv, dot_path, h_csv, b_csv;
    std::string ideal_csv, quotient_h_csv, quotient_b_csv;

    auto* check = app.add_subcommand(
        "check", "Structural conditions: row-finiteness, (K), (L), simplicity, primitivity");
    check->add_option("file", file, "graph JSON document")->required();

    auto* hereditary =
        app.add_subcommand("hereditary", "Saturated hereditary sets and closures");
    hereditary->add_option("file", file, "graph JSON document")->required();
    auto* closure_opt = hereditary->add_option(
        "--closure", closure_csv, "also report the saturated hereditary closure of these vertices");
    hereditary->add_option("--max-vertices", max_vertices, "enumeration vertex cap");

    auto* ideals = app.add_subcommand("ideals", "Enumerate the gauge-invariant ideals");
    ideals->add_option("file", file, "graph JSON document")->required();
    ideals->add_option("--dot", dot_path, "write the Hasse diagram as DOT to this path");
    ideals->add_option("--max-vertices", max_vertices, "enumeration vertex cap");

    auto* primitive = app.add_subcommand(
        "primitive", "Maximal tails, breaking vertices and gauge-invariant primitive ideals");
    primitive->add_option("file", file, "graph JSON document")->required();
    primitive->add_option("--max-vertices", max_vertices, "enumeration vertex cap");

    auto* quotient =
        app.add_subcommand("quotient", "Quotient graph by the ideal J_{H,B}");
    quotient->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
    quotient->add_option("file", file, "graph JSON document")->required();
    quotient->add_option("--h", h_csv, "comma-separated vertices of H")->required();
    quotient->add_option("--b", b_csv, "comma-separated vertices of B");

    auto* ktheory =
        app.add_subcommand("ktheory", "K-groups of the algebra, an ideal, or a quotient");
    ktheory->add_option("file", file, "graph JSON document")->required();
    auto* ideal_opt =
        ktheory->add_option("--ideal-h", ideal_csv, "hereditary set generating the ideal");
    auto* quotient_opt =
        ktheory->add_option("--quotient-h", quotient_h_csv, "H of the quotient ideal");
    auto* quotient_b_opt =
        ktheory->add_option("--quotient-b", quotient_b_csv, "B of the quotient ideal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (check->parsed()) return run_check(file);
        if (hereditary->parsed())
            return run_hereditary(file, max_vertices, closure_opt->count() > 0, closure_csv);
        if (ideals->parsed()) return run_ideals(file, max_vertices, dot_path);
        if (primitive->parsed()) return run_primitive(file, max_vertices);
        if (quotient->parsed()) return run_quotient(file, h_csv, b_csv);
        if (ktheory->parsed())
            return run_ktheory(file, ideal_opt->count() > 0, ideal_csv,
                               quotient_opt->count() > 0, quotient_h_csv,
                               quotient_b_opt->count() > 0, quotient_b_csv);
    } catch (const gia::EnumerationLimitError& e) {
        std::cerr << "gia: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gia: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
