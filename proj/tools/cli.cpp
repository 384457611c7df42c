#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cactus/crystals.hpp"
#include "cactus/groups.hpp"
#include "cactus/uqsl2.hpp"

namespace cactus::cli {

namespace {

using json = nlohmann::json;

struct Artifact {
    std::string text;
    int status = ExitCode::ok;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("CACTUS_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
    }
    return p;
}

std::string map_text(const CrystalMap& m) {
    std::ostringstream os;
    for (const auto& [from, to] : m.table()) os << from.to_string() << " -> " << to.to_string() << '\n';
    return os.str();
}

Artifact crystal_graph(const Shape& shape, const std::string& format) {
    if (format == "dot") return {to_dot(shape)};
    const Decomposition d(shape);
    if (format == "json") {
        json components = json::array();
        for (const auto& c : d.components()) {
            json chain = json::array();
            for (const auto& w : c.chain) chain.push_back(w.to_string());
            components.push_back({{"highest_weight", c.highest_weight}, {"chain", chain}});
        }
        return {dump({{"shape", shape}, {"components", components}})};
    }
    std::ostringstream os;
    for (const auto& c : d.components()) {
        os << "B_" << c.highest_weight << ":";
        for (std::size_t k = 0; k < c.chain.size(); ++k) os << (k ? " -> " : " ") << c.chain[k].to_string();
        os << '\n';
    }
    return {os.str()};
}

Artifact crystal_decompose(const Shape& shape, const std::string& format) {
    const auto summary = decompose(shape);
    if (format == "json") {
        json components = json::array();
        for (const auto& c : summary)
            components.push_back({{"highest_weight", c.highest_weight}, {"source", c.source.to_string()}});
        return {dump({{"shape", shape}, {"components", components}})};
    }
    std::ostringstream os;
    for (const auto& c : summary) os << "B_" << c.highest_weight << "  " << c.source.to_string() << '\n';
    return {os.str()};
}

Artifact crystal_map(const CrystalMap& m, const std::string& format) {
    if (format == "json") return {m.to_json() + "\n"};
    return {map_text(m)};
}

Artifact report(const std::string& text, bool ok) {
    return {dump(json::parse(text)), ok ? ExitCode::ok : ExitCode::verification_failed};
}

Artifact kt07_suite(int max) {
    json reports = json::array();
    bool ok = true;
    for (int m = 0; m <= max; ++m)
        for (int n = 0; n <= max; ++n) {
            const Kt07Report r = verify_kt07(m, n);
            ok = ok && r.ok();
            reports.push_back(json::parse(r.to_json()));
        }
    return {dump({{"max", max}, {"ok", ok}, {"pairs", reports}}), ok ? ExitCode::ok : ExitCode::verification_failed};
}

Artifact yang_baxter(int n) {
    const bool ok = yang_baxter_holds(n);
    const UqModule v = irreducible(n);
    const bool cactus = cactus_relation_holds(v, v, v);
    return {dump({{"n", n}, {"yang_baxter", ok}, {"cactus_relation_unitarized", cactus}, {"ok", ok && cactus}}),
            ok && cactus ? ExitCode::ok : ExitCode::verification_failed};
}

Artifact r_matrix(int m, int n, const std::string& frame_text, bool unitarized, const std::string& format) {
    const Frame frame = parse_frame(frame_text);
    const UqModule a = irreducible(m);
    const UqModule b = irreducible(n);
    const QMatrix x = unitarized ? unitarized_matrix(a, b, frame) : braiding_matrix(a, b, frame);
    if (format == "json") return {x.to_json(frame_name(frame)) + "\n"};
    return {x.to_string()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Commutors on sl2 crystals and U_q(sl2)-modules", "cactus"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("-o,--output", output, "Write the artifact to this file (relative paths use CACTUS_OUTPUT_DIR)");

    std::function<Artifact()> action;
    const auto text_or_json = CLI::IsMember({"text", "json"});

    // crystal graph / crystal decompose
    auto* crystal = app.add_subcommand("crystal", "Crystal graphs of tensor products of chains");
    crystal->require_subcommand(1);
    std::string graph_shape, graph_format = "text";
    auto* graph = crystal->add_subcommand("graph", "Crystal graph of a shape");
    graph->add_option("--shape", graph_shape, "Highest weights, e.g. 1,2")->required();
    graph->add_option("--format", graph_format, "dot, json or text")->check(CLI::IsMember({"dot", "json", "text"}));
    graph->callback([&] { action = [&] { return crystal_graph(parse_shape(graph_shape), graph_format); }; });

    std::string dec_shape, dec_format = "text";
    auto* dec = crystal->add_subcommand("decompose", "Connected components of a shape");
    dec->add_option("--shape", dec_shape, "Highest weights, e.g. 2,2")->required();
    dec->add_option("--format", dec_format, "json or text")->check(text_or_json);
    dec->callback([&] { action = [&] { return crystal_decompose(parse_shape(dec_shape), dec_format); }; });

    // commutor
    std::string com_a, com_b, variant = "c", com_format = "json";
    auto* com = app.add_subcommand("commutor", "Crystal commutor A (x) B -> B (x) A");
    com->add_option("--a", com_a, "Shape A")->required();
    com->add_option("--b", com_b, "Shape B")->required();
    com->add_option("--variant", variant, "c (Kashiwara involution) or S (Schutzenberger)")
        ->check(CLI::IsMember({"c", "S"}));
    com->add_option("--format", com_format, "json or text")->check(text_or_json);
    com->callback([&] {
        action = [&] {
            const Shape a = parse_shape(com_a);
            const Shape b = parse_shape(com_b);
            return crystal_map(variant == "S" ? commutor_S(a, b) : commutor_c(a, b), com_format);
        };
    });

    // cactus act
    auto* cactus = app.add_subcommand("cactus", "Cactus group action on tensor words");
    cactus->require_subcommand(1);
    std::string act_shape, act_format = "json";
    int act_p = 1, act_q = 2;
    auto* act = cactus->add_subcommand("act", "Map realizing s_{p,q}");
    act->add_option("--shape", act_shape, "Highest weights, e.g. 1,1,1")->required();
    act->add_option("--p", act_p)->required();
    act->add_option("--q", act_q)->required();
    act->add_option("--format", act_format, "json or text")->check(text_or_json);
    act->callback([&] {
        action = [&] { return crystal_map(cactus_action(parse_shape(act_shape), act_p, act_q), act_format); };
    });

    // rmatrix
    int rm_m = 1, rm_n = 1;
    std::string rm_frame = "s1", rm_format = "json";
    bool rm_unitarize = false;
    auto* rm = app.add_subcommand("rmatrix", "flip o R (or flip o Rbar) on V_m (x) V_n");
    rm->add_option("--m", rm_m)->check(CLI::NonNegativeNumber);
    rm->add_option("--n", rm_n)->check(CLI::NonNegativeNumber);
    rm->add_option("--frame", rm_frame, "s1 (product) or s2 (isotypic)")
        ->check(CLI::IsMember({"s1", "s2"}, CLI::ignore_case));
    rm->add_flag("--unitarize", rm_unitarize, "Use the unitarized R-matrix");
    rm->add_option("--format", rm_format, "json or text")->check(text_or_json);
    rm->callback([&] { action = [&] { return r_matrix(rm_m, rm_n, rm_frame, rm_unitarize, rm_format); }; });

    // check ...
    auto* check = app.add_subcommand("check", "Verification suites");
    check->require_subcommand(1);
    int cob_max = 2;
    auto* cob = check->add_subcommand("coboundary", "Involution and cactus relation on chain triples");
    cob->add_option("--max", cob_max, "Largest highest weight")->check(CLI::NonNegativeNumber);
    cob->callback([&] {
        action = [&] {
            const auto r = check_coboundary(chain_triples(cob_max));
            return report(r.to_json(), r.ok());
        };
    });

    int ca_factors = 3, ca_max = 2;
    auto* ca = check->add_subcommand("cactus-action", "Cactus group presentation on n-fold products");
    ca->add_option("--factors", ca_factors, "Number of tensor factors")->check(CLI::Range(2, 8));
    ca->add_option("--max", ca_max, "Largest highest weight")->check(CLI::NonNegativeNumber);
    ca->callback([&] {
        action = [&] {
            const auto r = check_cactus_action(ca_factors, ca_max);
            return report(r.to_json(), r.ok());
        };
    });

    auto* ob = check->add_subcommand("braiding-obstruction", "Show B1 admits no braiding");
    ob->callback([&] {
        action = [&] {
            const auto r = braiding_obstruction();
            return report(r.to_json(), r.obstruction());
        };
    });

    int kt_max = 2;
    auto* kt = check->add_subcommand("kt07", "Crystal limit of flip o Rbar against the signed crystal commutor");
    kt->add_option("--max", kt_max, "Largest highest weight")->check(CLI::NonNegativeNumber);
    kt->callback([&] { action = [&] { return kt07_suite(kt_max); }; });

    int yb_n = 1;
    auto* yb = check->add_subcommand("yang-baxter", "Yang-Baxter for flip o R on V_n^3");
    yb->add_option("--n", yb_n, "Highest weight")->check(CLI::NonNegativeNumber);
    yb->callback([&] { action = [&] { return yang_baxter(yb_n); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return ExitCode::usage_error;
    }

    Artifact artifact;
    try {
        artifact = action();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage_error;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::verification_failed;
    }

    if (output.empty()) {
        out << artifact.text;
    } else {
        const auto path = resolve_output(output);
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << path.string() << '\n';
            return ExitCode::usage_error;
        }
        file << artifact.text;
    }
    return artifact.status;
}

}  // namespace cactus::cli
