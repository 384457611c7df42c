#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cactus/crystals.hpp"
#include "cactus/qmatrix.hpp"
#include "cli.hpp"

using namespace cactus;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("unitarized matrix in the isotypic frame") {
    const Result r = invoke({"rmatrix", "--m", "1", "--n", "1", "--frame", "s2", "--unitarize"});
    CHECK(r.status == 0);
    const auto parsed = QMatrix::from_json(r.out);
    CHECK(parsed.frame == "S2");
    CHECK(parsed.matrix == QMatrix::diagonal({1, -1, 1, 1}));
}

TEST_CASE("braiding matrix round trips") {
    const Result r = invoke({"rmatrix", "--m", "2", "--n", "1", "--frame", "S1"});
    CHECK(r.status == 0);
    const auto parsed = QMatrix::from_json(r.out);
    CHECK(parsed.matrix.rows() == 6);
    CHECK(QMatrix::from_json(parsed.matrix.to_json("S1")).matrix == parsed.matrix);
}

TEST_CASE("braiding obstruction report") {
    const Result r = invoke({"check", "braiding-obstruction"});
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("forced") == "b1⊗b1⊗b-1");
    CHECK(j.at("hexagon") == "b1⊗b-1⊗b1");
    CHECK(j.at("obstruction") == true);
}

TEST_CASE("graph output") {
    const Result dot = invoke({"crystal", "graph", "--shape", "0", "--format", "dot"});
    CHECK(dot.status == 0);
    CHECK(dot.out.find("\"b0\";") != std::string::npos);
    CHECK(dot.out.find("->") == std::string::npos);

    const Result js = invoke({"crystal", "graph", "--shape", "1,2", "--format", "json"});
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j.at("components").size() == 2);
    CHECK(j.at("components")[1].at("chain")[0] == "b1⊗b0");

    const Result text = invoke({"crystal", "decompose", "--shape", "2,2"});
    CHECK(text.out == "B_4  b2⊗b2\nB_2  b2⊗b0\nB_0  b2⊗b-2\n");
}

TEST_CASE("commutor and cactus maps round trip") {
    const Result c = invoke({"commutor", "--a", "1", "--b", "2"});
    CHECK(c.status == 0);
    const CrystalMap m = CrystalMap::from_json(c.out);
    CHECK(m == commutor_c({1}, {2}));
    CHECK(CrystalMap::from_json(invoke({"commutor", "--a", "1", "--b", "2", "--variant", "S"}).out) == m);

    const Result s = invoke({"cactus", "act", "--shape", "1,1,1", "--p", "1", "--q", "3"});
    CHECK(CrystalMap::from_json(s.out) == cactus_action({1, 1, 1}, 1, 3));
}

TEST_CASE("verification suites succeed") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"check", "coboundary"},
                                                                  {"check", "cactus-action", "--factors", "4"},
                                                                  {"check", "kt07", "--max", "3"},
                                                                  {"check", "yang-baxter"}}) {
        const Result r = invoke(args);
        CHECK(r.status == 0);
        CHECK(nlohmann::json::parse(r.out).is_object());
    }
    const auto failures = failure_records_from_json(
        nlohmann::json::parse(invoke({"check", "cactus-action"}).out).at("failures").dump());
    CHECK(failures.empty());
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).status == 2);
    CHECK(invoke({"frobnicate"}).status == 2);
    CHECK(invoke({"rmatrix", "--bogus"}).status == 2);
    CHECK(invoke({"commutor", "--a", "1", "--b", "1", "--format", "dot"}).status == 2);
    CHECK(invoke({"crystal", "graph"}).status == 2);
    CHECK(invoke({"crystal", "graph", "--shape", "1,x"}).status == 2);
    CHECK(invoke({"cactus", "act", "--shape", "1,1", "--p", "2", "--q", "1"}).status == 2);
    CHECK(invoke({"rmatrix", "--frame", "s3"}).status == 2);
    CHECK(invoke({"--help"}).status == 0);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"check", "kt07", "--max", "2"};
    CHECK(invoke(args).out == invoke(args).out);
    const std::vector<std::string> graph{"crystal", "graph", "--shape", "1,1,2", "--format", "dot"};
    CHECK(invoke(graph).out == invoke(graph).out);
}

TEST_CASE("output files honour the output directory") {
    const auto dir = std::filesystem::temp_directory_path() / "cactus_cli_test";
    std::filesystem::create_directories(dir);
    setenv("CACTUS_OUTPUT_DIR", dir.c_str(), 1);
    const Result r = invoke({"--output", "graph.dot", "crystal", "graph", "--shape", "1", "--format", "dot"});
    unsetenv("CACTUS_OUTPUT_DIR");
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream file(dir / "graph.dot");
    const std::string content((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    CHECK(content == to_dot({1}));
    std::filesystem::remove_all(dir);
}
