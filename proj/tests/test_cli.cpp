// Spawns the installed CLI binary and checks the command contracts:
// exit codes, CSV shapes, sidecar round trip.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_raw(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

RunResult run(const std::string& args) {
    return run_raw(std::string(FRHOPF_CLI_PATH) + " " + args);
}

fs::path scratch_dir() {
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() / "frhopf_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
    auto p = scratch_dir() / name;
    std::ofstream out(p);
    out << text;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("classify: builtin demo is stable at (2,2), exit 0, a1 printed") {
    auto cfg = write_file("demo.ini", "[system]\nbuiltin = hopfield3\nalpha = 1.1\n");
    auto res = run("classify -c " + cfg.string() + " --mu 2,2");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("a1 = 8") != std::string::npos);
    CHECK(res.out.find("verdict = Stable") != std::string::npos);
}

TEST_CASE("classify: n=1 stable system, exit 0") {
    auto cfg = write_file("one.ini",
                          "[system]\ndegree = 1\nparams =\na1 = 1\nalpha = 1.5\n");
    auto res = run("classify -c " + cfg.string() + " --mu ''");
    // no parameters: mu list is empty
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("verdict = Stable") != std::string::npos);
}

TEST_CASE("classify: constructed critical polynomial exits 2 with r0 ~ 1") {
    auto cfg = write_file("crit.ini",
                          "[system]\ndegree = 3\nparams =\n"
                          "a1 = 1 - 2*cos(0.55*pi)\na2 = 1 - 2*cos(0.55*pi)\na3 = 1\n"
                          "alpha = 1.1\n");
    auto res = run("classify -c " + cfg.string() + " --mu ''");
    CHECK(res.exit_code == 2);
    CHECK(res.out.find("verdict = HopfCandidate") != std::string::npos);
    auto pos = res.out.find("critical_radius = ");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(res.out.substr(pos + 18)) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("classify: unstable scalar exits 3") {
    auto cfg = write_file("unstable.ini",
                          "[system]\ndegree = 1\nparams =\na1 = -1\nalpha = 1.5\n");
    auto res = run("classify -c " + cfg.string() + " --mu ''");
    CHECK(res.exit_code == 3);
    CHECK(res.out.find("verdict = Indeterminate") != std::string::npos);
}

TEST_CASE("classify: config errors exit 1") {
    auto cfg = write_file("broken.ini", "[system]\ndegree = 2\nparams = mu1\na1 = sin(\na2 = 1\n");
    auto res = run("classify -c " + cfg.string() + " --mu 1");
    CHECK(res.exit_code == 1);
}

TEST_CASE("scan: CSV header, sidecar round trip reproduces identical bytes") {
    auto cfg = write_file("scan.ini", "[system]\nbuiltin = hopfield3\nalpha = 1.1\n");
    auto csv1 = scratch_dir() / "scan1.csv";
    auto res = run("scan -c " + cfg.string() + " --axes mu1,mu2 --window 0.5,2.5,-2,2 " +
                   "--res 30,30 -o " + csv1.string());
    CHECK(res.exit_code == 0);

    std::string text = slurp(csv1);
    CHECK(text.rfind("mu1,mu2,r0,transversal\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') > 1); // nonempty curve

    auto sidecar = csv1;
    sidecar += ".json";
    REQUIRE(fs::exists(sidecar));
    std::string meta = slurp(sidecar);
    CHECK(meta.find("config_hash") != std::string::npos);
    CHECK(meta.find("tolerances") != std::string::npos);
    CHECK(meta.find("version") != std::string::npos);

    auto csv2 = scratch_dir() / "scan2.csv";
    auto res2 = run("scan -c " + sidecar.string() + " -o " + csv2.string());
    CHECK(res2.exit_code == 0);
    CHECK(slurp(csv2) == text);
}

TEST_CASE("scan: HOPF_FRH_THREADS=1 reproduces the default result") {
    auto cfg = write_file("scan_env.ini", "[system]\nbuiltin = hopfield3\nalpha = 1.1\n");
    const std::string args = "scan -c " + cfg.string() + " --axes mu1,mu2 --window 0.5,2.5,-2,2 --res 20,20";
    auto a = run(args);
    auto b = run_raw("env HOPF_FRH_THREADS=1 " + std::string(FRHOPF_CLI_PATH) + " " + args);
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("classify: json format emits a parsable verdict") {
    auto cfg = write_file("demo_json.ini", "[system]\nbuiltin = hopfield3\nalpha = 1.1\n");
    auto res = run("classify -c " + cfg.string() + " --mu 2,2 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"verdict\": \"Stable\"") != std::string::npos);
    CHECK(res.out.find("\"roots\"") != std::string::npos);
}

TEST_CASE("scan: empty window emits header only, exit 0") {
    auto cfg = write_file("scan_empty.ini", "[system]\nbuiltin = hopfield3\nalpha = 1.1\n");
    auto res = run("scan -c " + cfg.string() + " --axes mu1,mu2 --window 50,60,1,2 --res 8,8");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "mu1,mu2,r0,transversal\n");
}

TEST_CASE("scan: malformed window exits 1") {
    auto cfg = write_file("scan_bad.ini", "[system]\nbuiltin = hopfield3\n");
    auto res = run("scan -c " + cfg.string() + " --axes mu1,mu2 --window 6,0,-8,2 --res 10,10");
    CHECK(res.exit_code == 1);
}

TEST_CASE("degenerate: demo guess lands on the reference point (json format)") {
    auto cfg = write_file("degen.ini", "[system]\nbuiltin = hopfield3\nalpha = 1.1\n");
    auto res = run("degenerate -c " + cfg.string() + " --guess 3.8,-4.2 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"hessian\": \"NegDefinite\"") != std::string::npos);
    // parse the two mu0 entries out of the JSON output
    auto open = res.out.find("\"mu0\": [");
    REQUIRE(open != std::string::npos);
    const double m1 = std::stod(res.out.substr(open + 8));
    const double m2 = std::stod(res.out.substr(res.out.find(',', open) + 1));
    CHECK(std::abs(m1 - 3.817533638) < 1e-4);
    CHECK(std::abs(m2 + 4.170716050) < 1e-4);
}

TEST_CASE("degenerate: quadratic toy lands on the origin") {
    auto cfg = write_file("toy.ini",
                          "[system]\ndegree = 1\nparams = mu1, mu2\n"
                          "a1 = mu1^2 + mu2^2\nalpha = 1.3\n");
    auto res = run("degenerate -c " + cfg.string() + " --guess 1,1");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("hessian = PosDefinite") != std::string::npos);
}

TEST_CASE("degenerate: diverging guess exits 1") {
    auto cfg = write_file("degen2.ini", "[system]\nbuiltin = hopfield3\nalpha = 1.1\n");
    auto res = run("degenerate -c " + cfg.string() + " --guess 1e200,1e200");
    CHECK(res.exit_code == 1);
}

TEST_CASE("simulate: trajectory CSV plus metric; oversized step exits 1") {
    auto cfg = write_file("sim.ini", "[system]\nbuiltin = hopfield3\nalpha = 1.1\n");
    auto csv = scratch_dir() / "traj.csv";
    auto res = run("simulate -c " + cfg.string() +
                   " --mu 2,2 --x0 0.1,0.1,0.1 --T 20 --h 0.1 -o " + csv.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("oscillation_metric = ") != std::string::npos);
    std::string text = slurp(csv);
    CHECK(text.rfind("t,x1,x2,x3\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 202); // header + 201 samples

    auto bad = run("simulate -c " + cfg.string() + " --mu 2,2 --x0 0.1,0.1,0.1 --T 200 --h 100");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("selftest: exit 0 and one line per suite") {
    auto res = run("selftest");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("ok   rotation identities") != std::string::npos);
    CHECK(res.out.find("all suites passed") != std::string::npos);
}
