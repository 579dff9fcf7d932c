#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trigcolloc/cli.hpp"

using namespace trigcolloc;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
    const char* env = std::getenv("TRIGSPEC_FIXTURE_DIR");
    REQUIRE(env != nullptr);
    return std::string(env) + "/" + name;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    REQUIRE(f.good());
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

double value_after(const std::string& text, const std::string& label) {
    const auto at = text.find(label);
    REQUIRE(at != std::string::npos);
    return std::stod(text.substr(at + label.size()));
}

} // namespace

TEST_CASE("diffmat writes a commented node header and the matrix") {
    const RunResult r = run({"diffmat", "-N", "3", "-L", "6.283185307179586"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# D, nodes:", 0) == 0);
    // Three data rows with near-zero diagonal on a uniform grid.
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line); // header
    for (int i = 0; i < 3; ++i) {
        REQUIRE(std::getline(lines, line));
        std::istringstream cells(line);
        std::string cell;
        for (int j = 0; j <= i; ++j)
            REQUIRE(std::getline(cells, cell, ','));
        CHECK(std::abs(std::stod(cell)) < 1e-13);
    }
}

TEST_CASE("diffmat echoes an anchored node and can emit the preconditioned matrix") {
    const RunResult r = run({"diffmat", "-N", "5", "--anchor", "1.5707963267948966", "--hat"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1.5707963267948966") != std::string::npos);
    CHECK(r.out.find("# Dhat, nodes:") != std::string::npos);
}

TEST_CASE("diffmat rejects an even node count with the usage exit code") {
    const RunResult r = run({"diffmat", "-N", "4"});
    CHECK(r.code == 2);
    CHECK(r.err.find("odd") != std::string::npos);
}

TEST_CASE("unknown flags and missing subcommands are usage errors") {
    CHECK(run({"diffmat", "--frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("rank emits machine-readable reports and the predicted value") {
    const RunResult r =
        run({"rank", "--alphas", "1,0,1", "-L", "6.283185307179586", "-n", "5"});
    CHECK(r.code == 0);
    const auto reports = nlohmann::json::parse(r.out);
    REQUIRE(reports.is_array());
    CHECK(reports.size() == 4); // uniform + 3 random trials
    for (const auto& rep : reports) {
        CHECK(rep["predicted_rank"] == 9);
        CHECK(rep["measured_rank"] == 9);
        CHECK(rep["match"] == true);
    }
    CHECK(r.err.find("all match") != std::string::npos);

    const RunResult r2 = run({"rank", "--alphas", "0,1", "-n", "4"});
    CHECK(r2.code == 0);
    CHECK(nlohmann::json::parse(r2.out)[0]["predicted_rank"] == 8);
}

TEST_CASE("rank output is deterministic for a fixed seed") {
    const std::vector<std::string> args{"rank", "--alphas", "1,1,1", "-n", "4", "--seed", "12"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("rank rejects a zero leading coefficient") {
    const RunResult r = run({"rank", "--alphas", "0,0", "-n", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("leading coefficient") != std::string::npos);
}

TEST_CASE("solve prints E_max and writes the node table") {
    const fs::path dir = fs::temp_directory_path() / "trigspec_cli_solve";
    fs::create_directories(dir);
    const RunResult r = run({"solve", fixture("example1.cfg"), "--csv",
                             (dir / "nodes.csv").string(), "--dense",
                             (dir / "dense.csv").string(), "--svg", (dir / "plot.svg").string()});
    CHECK(r.code == 0);
    CHECK(value_after(r.err, "E_max = ") <= 1e-12);
    const std::string csv = slurp(dir / "nodes.csv");
    CHECK(csv.rfind("j,x_j,u_j,exact_j,abs_err", 0) == 0);
    const std::string dense = slurp(dir / "dense.csv");
    CHECK(dense.rfind("x,u", 0) == 0);
    CHECK(slurp(dir / "plot.svg").find("<svg") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("solve reports config problems with the usage exit code") {
    const fs::path bad = fs::temp_directory_path() / "trigspec_bad.cfg";
    {
        std::ofstream f(bad);
        f << "mode = bvp\n[grid]\nperiod = 1\npoints = 5\n"
             "[operator]\nexpr = d^2 + 1\nvariant = plain\n"; // no [rhs]
    }
    const RunResult r = run({"solve", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("[rhs]") != std::string::npos);
    fs::remove(bad);

    CHECK(run({"solve", "/nonexistent.cfg"}).code == 2);
}

TEST_CASE("eig reports bounds and fails the exit code on a miss") {
    const RunResult ok = run({"eig", fixture("example6.cfg")});
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("i,lambda_i,exact_i,lower,upper,in_bounds", 0) == 0);
    CHECK(ok.err.find("discarded") != std::string::npos);

    // Same fixture with an impossible first bound must exit 1.
    std::string text;
    {
        std::ifstream f(fixture("example6.cfg"));
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    const auto at = text.find("row = 1 0.540282 0.540319");
    REQUIRE(at != std::string::npos);
    text.replace(at, 25, "row = 1 9.0      9.5     ");
    const fs::path tweaked = fs::temp_directory_path() / "trigspec_bounds.cfg";
    std::ofstream(tweaked) << text;
    const RunResult miss = run({"eig", tweaked.string()});
    CHECK(miss.code == 1);
    CHECK(miss.err.find("OUT OF BOUNDS") != std::string::npos);
    fs::remove(tweaked);
}

TEST_CASE("paper regenerates all artifacts deterministically") {
    const fs::path dir = fs::temp_directory_path() / "trigspec_paper";
    fs::remove_all(dir);
    const RunResult r = run({"paper", "-o", dir.string()});
    CHECK(r.code == 0);

    const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
    REQUIRE(manifest["artifacts"].size() == 7);
    for (const auto& a : manifest["artifacts"])
        CHECK(fs::exists(dir / a["file"].get<std::string>()));

    // table2 error column strictly decreasing.
    std::istringstream t2(slurp(dir / "table2.csv"));
    std::string line;
    std::getline(t2, line); // header
    double prev = 1e300;
    int rows = 0;
    while (std::getline(t2, line)) {
        const double e = std::stod(line.substr(line.find(',') + 1));
        CHECK(e < prev);
        prev = e;
        ++rows;
    }
    CHECK(rows == 3);

    const std::string first = slurp(dir / "table4.csv");
    const fs::path dir2 = fs::temp_directory_path() / "trigspec_paper2";
    fs::remove_all(dir2);
    CHECK(run({"paper", "-o", dir2.string()}).code == 0);
    CHECK(slurp(dir2 / "table4.csv") == first);
    fs::remove_all(dir);
    fs::remove_all(dir2);
}

TEST_CASE("seed comes from TRIGSPEC_SEED when set") {
    ::setenv("TRIGSPEC_SEED", "987", 1);
    CHECK(default_seed() == 987);
    ::setenv("TRIGSPEC_SEED", "not-a-number", 1);
    CHECK_THROWS(default_seed());
    ::unsetenv("TRIGSPEC_SEED");
    CHECK(default_seed() == 0x5eed);
}

TEST_CASE("fmt17 round-trips doubles exactly") {
    for (double v : {0.1, 1.0 / 3.0, 3.7706269218062971e-09, -2.0, 1e300}) {
        CHECK(std::stod(fmt17(v)) == v);
    }
}
