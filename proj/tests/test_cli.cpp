#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ferrers/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "ferrers");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = ferrers::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "ferrers_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("count and enumerate", "[cli]") {
    auto r = cli({"count", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
    CHECK(r.err.find("# resolved config") != std::string::npos);

    r = cli({"--n", "100", "count", "--format", "json"});
    CHECK(r.out.find("\"190569292\"") != std::string::npos);

    r = cli({"enumerate", "--n", "4"});
    CHECK(r.out == "(4)\n(3,1)\n(2,2)\n(2,1,1)\n(1,1,1,1)\n");
    r = cli({"enumerate", "--n", "3", "--format", "csv"});
    CHECK(r.out == "n,index,parts\n3,0,3\n3,1,2 1\n3,2,1 1 1\n");
    CHECK(cli({"enumerate", "--n", "61"}).code == 1);
    CHECK(cli({"enumerate", "--n", "61", "--enum-cap", "61"}).code == 0);
}

TEST_CASE("solve", "[cli]") {
    auto r = cli({"solve", "--n", "3", "--policy", "free"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "no_tiling");
    CHECK(j["witness"].is_null());

    r = cli({"solve", "--n", "2", "--policy", "all"});
    CHECK(r.code == 0);
    const auto all = nlohmann::json::parse(r.out);
    REQUIRE(all.size() == 3);
    CHECK(all[0]["status"] == "no_tiling");
    CHECK(all[2]["status"] == "tiling_exists");

    r = cli({"solve", "--n", "99"});
    CHECK(r.code == 1);
    CHECK(r.err.find("exceeds cap") != std::string::npos);
    CHECK(cli({"solve", "--n", "4", "--solver-cap", "8"}).code == 2);
    CHECK(cli({"solve", "--n", "4", "--max-nodes", "1"}).out.find("timeout") != std::string::npos);
}

TEST_CASE("usage errors exit 2", "[cli]") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"count"}).code == 2);
    CHECK(cli({"count", "--n", "x"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"solve", "--n", "2", "--policy", "sideways"}).code == 2);
    CHECK(cli({"count", "--n", "4", "--format", "svg"}).code == 2);
    CHECK(cli({"maxpack", "--n", "2", "--policy", "all"}).code == 2);
    CHECK(cli({"render", "--parts", "4,x"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("render", "[cli]") {
    CHECK(cli({"render", "--parts", "4,2,1"}).out == "####\n##\n#\n");
    CHECK(cli({"render", "--parts", "(4,2,1)", "--conjugate"}).out == "###\n##\n#\n#\n");
    CHECK(cli({"render", "--parts", "1", "--format", "svg"}).out.rfind("<?xml", 0) == 0);
}

TEST_CASE("output file, packing round trip and lemma two on a file", "[cli]") {
    const auto packing = scratch("pack.json");
    auto r = cli({"pack", "--n", "20", "--out", packing.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const auto doc = nlohmann::ordered_json::parse(slurp(packing));
    CHECK(doc["report"]["packed"] == 625);

    const auto just_packing = scratch("just_packing.json");
    std::ofstream(just_packing) << doc["packing"].dump();
    r = cli({"render", "--packing", just_packing.string(), "--format", "svg"});
    CHECK(r.code == 0);
    CHECK(r.out.find("<polygon") != std::string::npos);

    r = cli({"audit-lemma2", "--packing", just_packing.string(), "--c1", "0.5"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["side"] == 5); // floor(0.8 * 0.5 * sqrt(20) ln 20) = floor(5.36)

    const auto broken = scratch("broken.json");
    std::ofstream(broken) << "{\"n\": 2}";
    CHECK(cli({"render", "--packing", broken.string()}).code == 1);
    CHECK(cli({"render", "--packing", scratch("missing.json").string()}).code == 1);
}

TEST_CASE("config file with command line override", "[cli]") {
    const auto cfg = scratch("run.toml");
    std::ofstream(cfg) << "n = 5\nformat = \"json\"\n";
    auto r = cli({"--config", cfg.string(), "count"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["p"] == "7");
    r = cli({"--config", cfg.string(), "count", "--n", "6"});
    CHECK(nlohmann::json::parse(r.out)["p"] == "11");
}

TEST_CASE("csv reports", "[cli]") {
    auto r = cli({"density-curve", "--ns", "20,30", "--samples", "50", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,offered,packed,width_used,density,density_times_logn,seed\n20,625,625,", 0) == 0);

    r = cli({"audit-lemma1", "--n", "20", "--exhaustive", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("20,627,exhaustive,") != std::string::npos);
    CHECK(cli({"audit-lemma1", "--n", "1", "--c1", "-1"}).code == 1);
    CHECK(cli({"audit-lemma2", "--n", "5"}).code == 1); // degenerate window side
}
