// Exercises the installed binary end to end: exit codes, report fields,
// file round trips, batch behaviour. CSTOOL_PATH is injected by CMake.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

#include "cs/matrix_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_tool(const std::string& args) {
    std::string cmd = std::string(CSTOOL_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("cs_cli_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("check exit codes for the gamma family") {
    auto holds = run_tool("check --gen example1 --gamma 1");
    CHECK(holds.exit_code == 0);
    CHECK(holds.output.find("CS holds") != std::string::npos);

    auto fails = run_tool("check --gen example1 --gamma 2");
    CHECK(fails.exit_code == 1);
    CHECK(fails.output.find("CS fails") != std::string::npos);
    CHECK(fails.output.find("witness") != std::string::npos);
}

TEST_CASE("malformed input exits 2 and names the entry") {
    TempDir dir;
    std::ofstream(dir.file("bad.json"))
        << R"({"A": {"n": 2, "entries": [["1","0"],["1/0","1"]]},
               "B": {"n": 2, "entries": [["1","0"],["0","1"]]}})";
    auto res = run_tool("check --pair " + dir.file("bad.json"));
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("1/0") != std::string::npos);
    CHECK(res.output.find("(2,1)") != std::string::npos);

    auto missing = run_tool("check --pair " + dir.file("nope.json"));
    CHECK(missing.exit_code == 2);

    auto no_input = run_tool("check");
    CHECK(no_input.exit_code == 2);

    auto half_input = run_tool("check --a " + dir.file("bad.json"));
    CHECK(half_input.exit_code == 2);
}

TEST_CASE("gen writes parseable files that round trip through check") {
    TempDir dir;
    auto gen = run_tool("gen --family block-abzero --n 5 --k 2 --seed 17 --out " + dir.file("pair.json"));
    CHECK(gen.exit_code == 0);
    auto pair = cs::load_pair(dir.file("pair.json"));
    CHECK(pair.a.rows() == 5);

    auto check = run_tool("check --pair " + dir.file("pair.json"));
    CHECK(check.exit_code == 0);

    // split files and determinism of the seed
    auto gen2 = run_tool("gen --family block-abzero --n 5 --k 2 --seed 17 --out-a " +
                         dir.file("a.json") + " --out-b " + dir.file("b.json"));
    CHECK(gen2.exit_code == 0);
    auto split = cs::load_pair(dir.file("a.json"), dir.file("b.json"));
    CHECK(split.a == pair.a);
    CHECK(split.b == pair.b);

    auto gen3 = run_tool("gen --family example1 --gamma 1 --out " + dir.file("e1.json"));
    CHECK(gen3.exit_code == 0);
    auto e1 = cs::load_pair(dir.file("e1.json"));
    CHECK(e1.a(1, 2) == cs::Scalar(1));
}

TEST_CASE("json and text reports carry the same verdict") {
    auto text = run_tool("check --gen example1 --gamma 2");
    auto as_json = run_tool("check --gen example1 --gamma 2 --format json");
    CHECK(text.exit_code == 1);
    CHECK(as_json.exit_code == 1);
    json j = json::parse(as_json.output);
    CHECK(j["schema"] == 1);
    CHECK(j["verdict"]["holds"] == false);
    CHECK(j["verdict"]["rank_of_M"] == 2);
    CHECK(j["verdict"]["witness"]["p"] == 1);
    CHECK(j["verdict"]["witness"]["q"] == 2);
    CHECK(text.output.find("rank(M): 2") != std::string::npos);
    CHECK(text.output.find("(1,2)") != std::string::npos);
}

TEST_CASE("analyze emits spectral flags and exits 0 on failure verdicts") {
    auto res = run_tool("analyze --gen example1 --gamma 2 --format json");
    CHECK(res.exit_code == 0);  // analysis completed; the verdict is data
    json j = json::parse(res.output);
    CHECK(j["schema"] == 1);
    CHECK(j["verdict"]["holds"] == false);
    CHECK(j["spectral"]["pairing_ok"] == false);
    CHECK(j["flags"].contains("prop2.I"));
    CHECK(j["flags"]["prop2.I"] == "not-applicable");  // CS fails, nothing to assert

    auto good = run_tool("analyze --gen block-abzero --n 4 --k 2 --seed 3 --format json");
    CHECK(good.exit_code == 0);
    json jg = json::parse(good.output);
    CHECK(jg["verdict"]["holds"] == true);
    CHECK(jg["spectral"]["pairing_ok"] == true);
    CHECK(jg["flags"]["prop2.I"] == "pass");
    CHECK(jg["flags"]["prop3.equivalence"] == "pass");
    CHECK(jg["flags"]["prop4.conclusion"] == "pass");
    CHECK(jg["spectral"]["nu"] == 0);
}

TEST_CASE("analyze runs the complementary search on request") {
    auto res = run_tool("analyze --gen example1 --gamma 1 --complementary-r 1 --format json");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j.contains("complementary"));
    CHECK(j["complementary"]["r"] == 1);
}

TEST_CASE("batch processes mixed manifests and keeps going past errors") {
    TempDir dir;
    std::ofstream(dir.file("bad.json")) << "not json";
    {
        std::ofstream manifest(dir.file("manifest.txt"));
        manifest << "# a comment line\n";
        manifest << "gen example1 gamma=1\n";
        manifest << "gen example1 gamma=2\n";
        manifest << "gen block-abzero n=4 k=2 seed=5\n";
        manifest << "pair " << dir.file("bad.json") << "\n";
        manifest << "gen nilpotent n=3 seed=8\n";
    }
    auto res = run_tool("batch --manifest " + dir.file("manifest.txt") + " --format json");
    CHECK(res.exit_code == 0);  // row errors are data, not disagreement
    json j = json::parse(res.output);
    REQUIRE(j["rows"].size() == 5);
    CHECK(j["rows"][0]["holds"] == true);
    CHECK(j["rows"][1]["holds"] == false);
    CHECK(j["rows"][2]["holds"] == true);
    CHECK(j["rows"][3].contains("error"));
    CHECK(j["counts"]["errors"] == 1);
    CHECK(j["disagreement"] == false);

    auto text = run_tool("batch --manifest " + dir.file("manifest.txt"));
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("ERROR") != std::string::npos);
    CHECK(text.output.find("total: 5") != std::string::npos);
}

TEST_CASE("batch of generated CS pairs is all holds with exit 0") {
    TempDir dir;
    {
        std::ofstream manifest(dir.file("cs.txt"));
        for (int i = 0; i < 5; ++i)
            manifest << "gen block-abzero n=4 k=2 seed=" << (10 + i) << "\n";
        for (int i = 0; i < 5; ++i)
            manifest << "gen normal-commuting n=3 seed=" << (20 + i) << "\n";
    }
    auto res = run_tool("batch --manifest " + dir.file("cs.txt") + " --format json");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.output);
    REQUIRE(j["rows"].size() == 10);
    for (const auto& row : j["rows"]) CHECK(row["holds"] == true);
    CHECK(j["counts"]["holds"] == 10);
    CHECK(j["counts"]["fails"] == 0);
}

TEST_CASE("analyze text and json agree on verdict content") {
    auto text = run_tool("analyze --gen block-abzero --n 4 --k 2 --seed 3");
    auto as_json = run_tool("analyze --gen block-abzero --n 4 --k 2 --seed 3 --format json");
    json j = json::parse(as_json.output);
    bool holds = j["verdict"]["holds"];
    CHECK(holds == (text.output.find("CS holds") != std::string::npos));
    CHECK(text.output.find("rank(M): " + std::to_string(j["verdict"]["rank_of_M"].get<int>())) !=
          std::string::npos);
    std::string pairing_text = j["spectral"]["pairing_ok"] == true ? "pairing: ok" : "pairing: FAILED";
    CHECK(text.output.find(pairing_text) != std::string::npos);

    auto lean = run_tool("analyze --gen block-abzero --n 4 --k 2 --seed 3 --no-spectral --format json");
    CHECK(lean.exit_code == 0);
    json jl = json::parse(lean.output);
    CHECK(!jl.contains("spectral"));
}

TEST_CASE("output lands in a file when requested") {
    TempDir dir;
    auto res = run_tool("check --gen example1 --gamma 1 --output " + dir.file("report.txt"));
    CHECK(res.exit_code == 0);
    std::ifstream in(dir.file("report.txt"));
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(body.find("CS holds") != std::string::npos);
}

TEST_CASE("method subsets") {
    auto rank_only = run_tool("check --gen example1 --gamma 1 --method rank");
    CHECK(rank_only.exit_code == 0);
    auto two = run_tool("check --gen example1 --gamma 2 --method rank,direct");
    CHECK(two.exit_code == 1);
    auto unknown = run_tool("check --gen example1 --method nonsense");
    CHECK(unknown.exit_code == 2);

    auto ident_holds = run_tool("check --gen example1 --gamma 1 --method identities");
    CHECK(ident_holds.exit_code == 0);
    auto ident_fails = run_tool("check --gen example1 --gamma 2 --method identities");
    CHECK(ident_fails.exit_code == 1);

    // identities auto-skip past the combinatorial cutoff
    auto big = run_tool("check --gen random --n 9 --seed 4 --format json");
    json jb = json::parse(big.output);
    CHECK(jb["methods"]["identities"].get<std::string>().find("skipped") != std::string::npos);
    auto only_skipped = run_tool("check --gen random --n 9 --seed 4 --method identities");
    CHECK(only_skipped.exit_code == 2);
}
