#include "ellmirror/json_io.hpp"

#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(ELLMIRROR_CLI) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    auto d = fs::temp_directory_path() / ("ellmirror_cli_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("curve counts on the command line", "[cli]") {
    auto r = run("j-coeffs --class 0,2,0,1");
    CHECK(r.status == 0);
    CHECK(r.out == "-9\n");
    CHECK(run("j-coeffs --class 1,2,0,1").out == "144\n");
    CHECK(run("--pairing literal j-coeffs --class 0,2,0,1").out == "-18\n");
}

TEST_CASE("Bryan-Leung coefficients", "[cli]") {
    CHECK(run("bryan-leung --order 0").out == "1\n");
    CHECK(run("bryan-leung --order 3").out == "1 12 90 520\n");
}

TEST_CASE("usage errors exit with 2", "[cli]") {
    CHECK(run("no-such-command").status == 2);
    CHECK(run("elliptic theta --rho -i").status == 2);
    CHECK(run("--ray-label-offset 1 phi").status == 2);
    CHECK(run("--pairing other j-coeffs").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("artifacts and config files", "[cli][io]") {
    auto dir = scratch("walls");
    auto r = run("--out " + dir.string() + " --emit json,csv walls");
    REQUIRE(r.status == 0);
    REQUIRE(fs::exists(dir / "walls.json"));
    auto doc = ellmirror::Json::parse(slurp(dir / "walls.json"));
    CHECK(doc["metadata"]["tool"] == "ellmirror");
    CHECK(doc["metadata"]["subcommand"] == "walls");
    CHECK(doc["metadata"]["config"]["pairing"] == "divisor");
    CHECK(doc.contains("data"));
    bool any_csv = false;
    for (const auto& e : fs::directory_iterator(dir)) any_csv = any_csv || e.path().extension() == ".csv";
    CHECK(any_csv);

    auto cfg = dir / "run.ini";
    std::ofstream(cfg) << "pairing=literal\n";
    CHECK(run("--config " + cfg.string() + " j-coeffs --class 0,2,0,1").out == "-18\n");
    CHECK(run("--config " + cfg.string() + " --pairing divisor j-coeffs --class 0,2,0,1").out == "-9\n");
    fs::remove_all(dir);
}

TEST_CASE("output does not depend on the thread count", "[cli]") {
    auto a = scratch("t1"), b = scratch("t4");
    REQUIRE(run("--out " + a.string() + " --threads 1 mirror-eqs --truncation 5 --no-spot-check").status == 0);
    REQUIRE(run("--out " + b.string() + " --threads 4 mirror-eqs --truncation 5 --no-spot-check").status == 0);
    std::size_t compared = 0;
    for (const auto& e : fs::directory_iterator(a)) {
        if (e.path().extension() != ".json") continue;
        auto ja = ellmirror::Json::parse(slurp(e.path())), jb = ellmirror::Json::parse(slurp(b / e.path().filename()));
        CHECK(ja["data"] == jb["data"]);
        ++compared;
    }
    CHECK(compared > 0);
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("elliptic subcommands", "[cli][elliptic]") {
    auto j = run("elliptic j-check");
    CHECK(j.status == 0);
    CHECK(j.out.find("paths agree: yes") != std::string::npos);
    auto f = run("elliptic family");
    CHECK(f.out.find("2 singular fibres each with multiplicity 2") != std::string::npos);
    auto m = run("elliptic modular --rho 3i");
    CHECK(m.status == 0);
    CHECK(m.out.find("FAIL") == std::string::npos);
}
