#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

TEST_SUITE_BEGIN("cli");

namespace {

const char* cli_path() { return std::getenv("DADQC_CLI_PATH"); }

int run_cli(const std::string& args) {
    const std::string cmd = std::string(cli_path()) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "dadqc_cli_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream os(p);
    os << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

const char* kSampleConfig =
    "host: complete\n"
    "n: 4\n"
    "d: 3\n"
    "seed: 12\n"
    "ising: graph-state\n"
    "A0: 1.0\n"
    "B0: 1.0\n"
    "T: 4.0\n"
    "delta: 1.0\n"
    "mu: 0.05\n"
    "steps: 256\n"
    "tolerance: 1e-8\n"
    "adaptive: true\n"
    "samples: 200\n";

}  // namespace

TEST_CASE("byte-identical reruns for identical config and seed") {
    if (!cli_path()) return;  // only meaningful under ctest
    const auto dir = fresh_dir("determinism");
    write_file(dir / "exp.cfg", kSampleConfig);
    const std::string base = " sample --config " + (dir / "exp.cfg").string();
    REQUIRE(run_cli(base + " --out-dir " + (dir / "a").string()) == 0);
    REQUIRE(run_cli(base + " --out-dir " + (dir / "b").string()) == 0);
    CHECK(slurp(dir / "a" / "samples.txt") == slurp(dir / "b" / "samples.txt"));
    CHECK(!slurp(dir / "a" / "samples.txt").empty());
    // Seed override changes the output.
    REQUIRE(run_cli(base + " --seed 13 --out-dir " + (dir / "c").string()) == 0);
    CHECK(slurp(dir / "a" / "samples.txt") != slurp(dir / "c" / "samples.txt"));
}

TEST_CASE("provenance header is embedded in outputs") {
    if (!cli_path()) return;
    const auto dir = fresh_dir("provenance");
    write_file(dir / "exp.cfg", kSampleConfig);
    REQUIRE(run_cli(" graph --config " + (dir / "exp.cfg").string() + " --out-dir " +
                    dir.string()) == 0);
    const std::string text = slurp(dir / "graph.txt");
    CHECK(text.starts_with("# {\"config_hash\":"));
    CHECK(text.find("\"seed\":12") != std::string::npos);
    CHECK(text.find("\"version\":") != std::string::npos);
}

TEST_CASE("config errors exit with code 2 and a line number") {
    if (!cli_path()) return;
    const auto dir = fresh_dir("config_err");
    write_file(dir / "bad.cfg",
               "host: complete\nn: 4\nd: 3\nA0: 1\nB0: 1\nT: 4.0\ndelta: 9.0\nmu: 0.1\n");
    CHECK(run_cli(" schedule --config " + (dir / "bad.cfg").string() + " --out-dir " +
                  dir.string()) == 2);
    CHECK(run_cli(" sample --config " + (dir / "missing.cfg").string()) == 2);

    write_file(dir / "badfile.cfg",
               "host: complete\nn: 4\nd: 3\nising: file\nising_file: /nonexistent.ising\n"
               "A0: 1\nB0: 1\nT: 4.0\ndelta: 1.0\nmu: 0.1\n");
    CHECK(run_cli(" verify --config " + (dir / "badfile.cfg").string() + " --out-dir " +
                  dir.string()) == 2);
}

TEST_CASE("supremacy mode runs the calibrated pipeline") {
    if (!cli_path()) return;
    const auto dir = fresh_dir("supremacy");
    write_file(dir / "exp.cfg",
               "host: complete\nn: 4\nd: 3\nseed: 6\nmode: supremacy\ninstances: 3\n"
               "A0: 1\nB0: 1\nT: 4.0\ndelta: 1.0\ntarget_eps: 0.2\n"
               "steps: 1024\ntolerance: 1e-9\nadaptive: true\n");
    REQUIRE(run_cli(" anticonc --config " + (dir / "exp.cfg").string() + " --out-dir " +
                    dir.string()) == 0);
    const std::string rows = slurp(dir / "supremacy.jsonl");
    CHECK(rows.find("\"tv\":") != std::string::npos);
    CHECK(rows.find("\"budget\":") != std::string::npos);
    CHECK(rows.find("\"pass\":true") != std::string::npos);
    CHECK(slurp(dir / "summary.json").find("\"passes\": 3") != std::string::npos);
}

TEST_CASE("supremacy mode refuses d = 2") {
    if (!cli_path()) return;
    const auto dir = fresh_dir("refuse_d2");
    write_file(dir / "exp.cfg",
               "host: complete\nn: 6\nd: 2\nseed: 3\nmode: supremacy\ninstances: 2\n"
               "A0: 1\nB0: 1\nT: 4.0\ndelta: 1.0\ntarget_eps: 0.2\n");
    CHECK(run_cli(" anticonc --config " + (dir / "exp.cfg").string() + " --out-dir " +
                  dir.string()) == 2);
}

TEST_CASE("anticonc sweep emits one csv row per grid point") {
    if (!cli_path()) return;
    const auto dir = fresh_dir("sweep");
    write_file(dir / "exp.cfg",
               "host: complete\nn: 12\nd: 3\nseed: 4\nmode: moments\ninstances: 50\n"
               "n_grid: 4,6,8,10,12\n");
    REQUIRE(run_cli(" anticonc --config " + (dir / "exp.cfg").string() + " --out-dir " +
                    dir.string()) == 0);
    const std::string csv = slurp(dir / "m2_vs_n.csv");
    int rows = 0;
    for (const char c : csv) rows += c == '\n' ? 1 : 0;
    CHECK(rows == 2 + 5);  // provenance + header + 5 grid rows

    // Fixed seed reruns are byte-identical.
    const auto again = fresh_dir("sweep2");
    REQUIRE(run_cli(" anticonc --config " + (dir / "exp.cfg").string() + " --out-dir " +
                    again.string()) == 0);
    CHECK(slurp(dir / "moments.jsonl") == slurp(again / "moments.jsonl"));
}

TEST_CASE("verify accepts an ising instance file") {
    if (!cli_path()) return;
    const auto dir = fresh_dir("ising_file");
    // 4-cycle instance with explicit fields and couplings.
    write_file(dir / "inst.ising",
               "4 4\n0 1\n0 3\n1 2\n2 3\n"
               "h 0 0.3\nh 2 -0.2\n"
               "J 0 1 0.5\nJ 2 3 -0.4\n");
    write_file(dir / "exp.cfg",
               "host: complete\nn: 4\nd: 2\nseed: 8\nising: file\nising_file: " +
                   (dir / "inst.ising").string() +
                   "\nA0: 1\nB0: 1\nT: 3.0\ndelta: 1.0\nmu: auto\ntarget_eps: 0.3\n"
                   "steps: 128\ntolerance: 1e-7\nadaptive: true\n");
    CHECK(run_cli(" verify --config " + (dir / "exp.cfg").string() + " --out-dir " +
                  dir.string()) == 0);
    const std::string rows = slurp(dir / "bounds.jsonl");
    CHECK(rows.find("\"check\":\"tv-bound\"") != std::string::npos);
}

TEST_CASE("verify runs the bound suite end to end") {
    if (!cli_path()) return;
    const auto dir = fresh_dir("verify");
    write_file(dir / "exp.cfg",
               "host: complete\nn: 3\nd: 2\nseed: 5\nising: random-grid\n"
               "A0: 1\nB0: 1\nT: 3.0\ndelta: 1.0\nmu: auto\ntarget_eps: 0.2\n"
               "steps: 128\ntolerance: 1e-7\nadaptive: true\n");
    CHECK(run_cli(" verify --config " + (dir / "exp.cfg").string() + " --out-dir " +
                  dir.string()) == 0);
    const std::string rows = slurp(dir / "bounds.jsonl");
    CHECK(rows.find("\"check\":\"duhamel\"") != std::string::npos);
    CHECK(rows.find("\"check\":\"tv-bound\"") != std::string::npos);
    CHECK(rows.find("\"check\":\"perturbation-unitary\"") != std::string::npos);
    CHECK(rows.find("\"check\":\"cz-product\"") != std::string::npos);
    CHECK(rows.find("\"check\":\"interaction-picture\"") != std::string::npos);
}

TEST_SUITE_END();
