// End-to-end checks of the installed CLI: spawns the real binary and
// asserts on exit codes, output files, and the documented subcommand
// behavior. RANDSAT_CLI_PATH is injected by the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "randsat/cnf.hpp"
#include "randsat/dimacs.hpp"
#include "randsat/harness.hpp"

using namespace randsat;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("randsat_cli_" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run_cli(const std::string& args, const fs::path& capture = {}) {
    std::string cmd = std::string(RANDSAT_CLI_PATH) + " " + args;
    if (capture.empty())
        cmd += " > /dev/null 2>&1";
    else
        cmd += " > " + capture.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    REQUIRE(out.good());
    out << text;
}

// Width-3 formula whose first three variables carry all eight sign
// patterns: unsatisfiable regardless of the declared variable count.
std::string all_patterns_cnf(unsigned n) {
    std::ostringstream os;
    os << "p cnf " << n << " 8\n";
    for (int s = 0; s < 8; ++s) {
        os << (s & 4 ? "-1" : "1") << ' ' << (s & 2 ? "-2" : "2") << ' '
           << (s & 1 ? "-3" : "3") << " 0\n";
    }
    return os.str();
}

}  // namespace

TEST_CASE("version and usage errors") {
    TempDir dir("usage");
    fs::path out = dir.path / "out.txt";
    CHECK(run_cli("--version", out) == 0);
    CHECK(slurp(out).find("randsat") != std::string::npos);

    CHECK(run_cli("") == 4);                       // subcommand required
    CHECK(run_cli("gen -k 3 -m 10") == 4);         // missing -n
    CHECK(run_cli("gen -n 10 -k 3") == 4);         // fixed-m needs -m
    CHECK(run_cli("solve " + (dir.path / "nope.cnf").string()) == 4);
    CHECK(run_cli("frobnicate") == 4);
}

TEST_CASE("gen, solve, verify round trip") {
    TempDir dir("roundtrip");
    fs::path listing = dir.path / "gen.txt";
    int rc = run_cli("gen --mode planted -n 14 -k 3 -m 56 --count 1 --seed 21"
                     " --out-dir " + dir.path.string(),
                     listing);
    CHECK(rc == 0);
    fs::path cnf = dir.path / "inst_0.cnf";
    fs::path assign = dir.path / "inst_0.assign";
    REQUIRE(fs::exists(cnf));
    REQUIRE(fs::exists(assign));
    CHECK(slurp(listing).find("inst_0.cnf") != std::string::npos);

    fs::path report = dir.path / "report.json";
    rc = run_cli("solve " + cnf.string() + " --seed 22 --out " +
                 report.string());
    CHECK(rc == 0);
    json doc = json::parse(slurp(report));
    CHECK(doc["result"]["outcome"] == "found");

    fs::path vout = dir.path / "verify.txt";
    CHECK(run_cli("verify " + cnf.string() + " --result " + report.string(),
                  vout) == 0);
    CHECK(slurp(vout).find("satisfied") != std::string::npos);
    CHECK(run_cli("verify " + cnf.string() + " --assignment " +
                  assign.string()) == 0);
    // --assignment and --result are mutually exclusive.
    CHECK(run_cli("verify " + cnf.string() + " --assignment " +
                  assign.string() + " --result " + report.string()) == 4);
    CHECK(run_cli("verify " + cnf.string()) == 4);  // needs one of the two
}

TEST_CASE("malformed input is a runtime error") {
    TempDir dir("malformed");
    fs::path bad = dir.path / "bad.cnf";
    write_file(bad, "p cnf nonsense\n");
    CHECK(run_cli("solve " + bad.string()) == 3);
    CHECK(run_cli("verify " + bad.string() + " --assignment " + bad.string()) ==
          3);
}

TEST_CASE("unsatisfiable instance: not found, report has no certificate") {
    TempDir dir("unsat");
    fs::path cnf = dir.path / "unsat.cnf";
    write_file(cnf, all_patterns_cnf(10));
    fs::path report = dir.path / "report.json";
    // Width 3 delegates to the small-width solver, which settles this by
    // exhaustive sweep.
    CHECK(run_cli("solve " + cnf.string() + " --seed 23 --out " +
                  report.string()) == 1);
    json doc = json::parse(slurp(report));
    CHECK(doc["result"]["assignment"].is_null());

    fs::path vout = dir.path / "verify.txt";
    CHECK(run_cli("verify " + cnf.string() + " --result " + report.string(),
                  vout) == 2);
    CHECK(slurp(vout).find("no assignment in report") != std::string::npos);

    // A concrete falsifying assignment names the clause it misses.
    fs::path zeros = dir.path / "zeros.assign";
    write_file(zeros, "0000000000\n");
    CHECK(run_cli("verify " + cnf.string() + " --assignment " + zeros.string(),
                  vout) == 1);
    CHECK(slurp(vout).find("falsified clause") != std::string::npos);
}

TEST_CASE("unresolved run above the sweep limit is inconclusive") {
    TempDir dir("inconclusive");
    fs::path cnf = dir.path / "wide.cnf";
    write_file(cnf, all_patterns_cnf(27));  // too many vars to sweep
    CHECK(run_cli("solve " + cnf.string() + " --seed 24") == 2);
}

TEST_CASE("validate writes per-suite files") {
    TempDir dir("validate");
    fs::path vout = dir.path / "out.txt";
    int rc = run_cli("validate --suite poisson --samples 20000 --seed 5"
                     " --out-dir " + dir.path.string(),
                     vout);
    CHECK(rc == 0);
    CHECK(slurp(vout).find("suite poisson: PASS") != std::string::npos);
    REQUIRE(fs::exists(dir.path / "poisson.json"));
    REQUIRE(fs::exists(dir.path / "poisson.csv"));
    json doc = json::parse(slurp(dir.path / "poisson.json"));
    CHECK(doc["suite"] == "poisson");
    CHECK(doc["passed"] == true);
}

TEST_CASE("bench writes the cost table") {
    TempDir dir("bench");
    fs::path csv = dir.path / "bench.csv";
    int rc = run_cli("bench --mode planted -n 14 -k 3 -m 56 --count 2"
                     " --seed 7 --alpha-n 3 --k-star 3 --paired"
                     " --rate-samples 1000 --out " + csv.string());
    CHECK(rc == 0);
    std::string text = slurp(csv);
    CHECK(text.rfind("index,run,n,k,m,alpha_n", 0) == 0);
    CHECK(text.find("always_positive") != std::string::npos);
}

TEST_CASE("config file feeds options, flags win") {
    TempDir dir("config");
    fs::path cfg = dir.path / "cfg.toml";
    write_file(cfg,
               "[gen]\n"
               "num-vars = 12\n"
               "width = 3\n"
               "num-clauses = 40\n"
               "count = 1\n"
               "seed = 33\n"
               "out-dir = \"" + dir.path.string() + "\"\n");
    CHECK(run_cli("--config " + cfg.string() + " gen") == 0);
    Formula f = read_dimacs_file((dir.path / "inst_0.cnf").string());
    CHECK(f.num_vars() == 12);
    CHECK(f.num_clauses() == 40);

    // Command-line value overrides the config file.
    CHECK(run_cli("--config " + cfg.string() + " gen -n 13 --prefix over") ==
          0);
    Formula g = read_dimacs_file((dir.path / "over_0.cnf").string());
    CHECK(g.num_vars() == 13);
}
