#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "gtkit/json_io.hpp"

using namespace gtkit;

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GTKIT_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("gtkit_cli_test_" + name);
}

}  // namespace

TEST_CASE("generation emits the documented system shape", "[cli]") {
    auto r = run_cli("gen --family sigma --n 3");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["format"] == "gtkit-system");
    CHECK(j["generators"].size() == 2);
    CHECK(j["order"] == "degrevlex");

    auto partial = run_cli("gen --family partial --n 2 --k 1");
    REQUIRE(partial.code == 0);
    json pj = json::parse(partial.out);
    CHECK(pj["beta"] == json::array({0, 0}));
    CHECK(pj["generators"].size() == 2);

    CHECK(run_cli("gen --family nonsense --n 3").code == 3);
    CHECK(run_cli("gen --family gamma").code == 3);
    CHECK(run_cli("gen --family gamma --n 9").code == 3);
}

TEST_CASE("verification claims map verdicts onto exit codes", "[cli]") {
    auto ok = run_cli("verify --claim ovsienko --n 2");
    REQUIRE(ok.code == 0);
    json report = json::parse(ok.out);
    CHECK(report["verdict"] == "verified_exact");
    CHECK(report["artifacts"]["ci_certificate"]["concluded_dim"] == 1);
    CHECK(validate_report(report).empty());

    CHECK(run_cli("verify --claim weak --n 9").code == 3);
    CHECK(run_cli("verify --claim nonsense --n 2").code == 3);
    CHECK(run_cli("verify --claim partial --n 3").code == 3);
}

TEST_CASE("identical runs differ only in timing", "[cli]") {
    const auto a = scratch("det_a.json"), b = scratch("det_b.json");
    REQUIRE(run_cli("verify --claim weak --n 3 --out " + a.string()).code == 0);
    REQUIRE(run_cli("verify --claim weak --n 3 --out " + b.string()).code == 0);
    json ja = load_json_file(a.string()), jb = load_json_file(b.string());
    CHECK(ja["timing"].contains("wall_seconds"));
    ja.erase("timing");
    jb.erase("timing");
    CHECK(ja == jb);
}

TEST_CASE("pipelines compose through system files", "[cli]") {
    const auto sys = scratch("g3.json");
    REQUIRE(run_cli("gen --family gamma --n 3 --out " + sys.string()).code == 0);

    auto dim = run_cli("dim --system " + sys.string());
    REQUIRE(dim.code == 0);
    CHECK(json::parse(dim.out)["krull_dim"] == 3);

    auto inside = run_cli("member --system " + sys.string() + " --poly \"x11 + x22 + x33\"");
    REQUIRE(inside.code == 0);
    CHECK(json::parse(inside.out)["member"] == true);

    auto outside = run_cli("member --system " + sys.string() + " --poly x12 --radical");
    REQUIRE(outside.code == 0);
    CHECK(json::parse(outside.out)["member"] == false);

    auto gb = run_cli("gb --system " + sys.string() + " --field fp --prime 32003");
    REQUIRE(gb.code == 0);
    CHECK(json::parse(gb.out)["reduced_groebner"] == true);

    auto quo = run_cli("quotient --system " + sys.string() + " --poly x11");
    REQUIRE(quo.code == 0);
    CHECK(json::parse(quo.out)["generators"] == json::array({"1"}));

    auto reg = run_cli("regseq --system " + sys.string() + " --permutations 5 --seed 3");
    REQUIRE(reg.code == 0);
    json rj = json::parse(reg.out);
    CHECK(rj["verdict"] == "regular");
    CHECK(rj["permutation_invariance"]["all_regular"] == true);

    auto eq = run_cli("equidim --system " + sys.string());
    REQUIRE(eq.code == 0);
    CHECK(json::parse(eq.out)["concluded_dim"] == 3);

    auto kz = run_cli("koszul --system " + sys.string() + " --max-degree 4");
    REQUIRE(kz.code == 0);
    CHECK(json::parse(kz.out)["homology_found"] == false);
}

TEST_CASE("budget exhaustion is a distinct exit", "[cli]") {
    const auto sys = scratch("g4.json");
    REQUIRE(run_cli("gen --family gamma --n 4 --out " + sys.string()).code == 0);
    CHECK(run_cli("gb --system " + sys.string() + " --budget-seconds 0.001").code == 2);
    CHECK(run_cli("gb --system " + sys.string() + " --budget-seconds -1").code == 3);
    CHECK(run_cli("gb --system " + sys.string() + " --field fp --prime 15").code == 3);
}

TEST_CASE("point commands read matrix files", "[cli]") {
    const auto mat = scratch("m.json");
    std::ofstream(mat.string()) << "[[1,2],[3,4]]";
    auto r = run_cli("phi --matrix " + mat.string() + " --k 2");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["levels"][0]["coefficients"] == json::array({-1}));
    CHECK(j["levels"][1]["coefficients"] == json::array({-5, -2}));
    CHECK(j["strongly_nilpotent"] == false);

    auto probe = run_cli("fiber-probe --n 3 --k 2 --trials 10 --seed 5");
    REQUIRE(probe.code == 0);
    json pj = json::parse(probe.out);
    CHECK(pj["expected_fiber_dim"] == 4);
    CHECK(pj["ranks"].size() == 10);
}

TEST_CASE("reports obey the shipped schema contract", "[cli]") {
    json schema = load_json_file(GTKIT_SCHEMA_PATH);
    const auto required = schema["required"];
    const auto verdicts = schema["properties"]["verdict"]["enum"];

    auto r = run_cli("verify --claim zelobenko --n 1");
    REQUIRE(r.code == 0);
    json report = json::parse(r.out);
    for (const auto& key : required) CHECK(report.contains(key.get<std::string>()));
    bool verdict_known = false;
    for (const auto& v : verdicts) {
        if (report["verdict"] == v) verdict_known = true;
    }
    CHECK(verdict_known);
    CHECK(validate_report(report).empty());

    const char* accepted[] = {"verified_exact", "verified_modular",
                              "inconclusive_budget", "FAILED", "success"};
    REQUIRE(verdicts.size() == 5);
    for (const char* v : accepted) {
        bool found = false;
        for (const auto& sv : verdicts) {
            if (sv == v) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("a refuted decomposition step surfaces as a counterexample", "[cli]") {
    auto r = run_cli("verify --claim gl4 --long");
    CHECK(r.code == 1);
    json report = json::parse(r.out);
    CHECK(report["verdict"] == "FAILED");
    REQUIRE(report.contains("failure"));
    CHECK(report["failure"]["check"] == "b_chain");
    const auto& payload = report["failure"]["payload"];
    CHECK(payload["step"] == "B1");
    CHECK(payload["split_radical_equal"] == false);
    CHECK(validate_report(report).empty());
}
