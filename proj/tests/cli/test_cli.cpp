// End-to-end checks of the volclust binary: flag surface, config file,
// precedence, exit codes.
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "synthetic.hpp"
#include "volclust/csv.hpp"

namespace {

namespace fs = std::filesystem;

struct Workspace {
    fs::path dir;
    fs::path input;

    Workspace() {
        dir = fs::temp_directory_path() / "volclust_cli_tests";
        fs::remove_all(dir);
        fs::create_directories(dir);
        const auto series = volclust::testing::synthetic_market_series("SYN", 600, 12);
        input = dir / "syn.csv";
        std::ofstream out(input, std::ios::binary);
        out << volclust::to_price_csv(series);
    }
};

int run_cli(const std::string& args) {
    const std::string cmd =
        std::string("\"") + VOLCLUST_ANALYZE_BIN + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

fs::path only_run_dir(const fs::path& outdir) {
    for (const auto& entry : fs::directory_iterator(outdir)) {
        if (entry.is_directory()) return entry.path();
    }
    return {};
}

}  // namespace

TEST_CASE("analyze via flags succeeds with exit 0") {
    Workspace ws;
    const auto outdir = ws.dir / "flags";
    const int rc = run_cli("analyze --input SYN=" + ws.input.string() +
                           " --experiment acf,pdf --max-lag 30 --outdir " + outdir.string());
    CHECK(rc == 0);
    const auto run_dir = only_run_dir(outdir);
    REQUIRE(!run_dir.empty());
    CHECK(fs::exists(run_dir / "SYN_acf_returns.csv"));
    CHECK(fs::exists(run_dir / "SYN_pdf.csv"));
    CHECK(fs::exists(run_dir / "manifest.json"));
}

TEST_CASE("config file drives a run and flags override it") {
    Workspace ws;
    const auto conf = ws.dir / "run.conf";
    {
        std::ofstream out(conf);
        out << "[analyze]\n"
            << "input = \"SYN=" << ws.input.string() << "\"\n"
            << "p = [15, 20]\n"
            << "max-lag = 25\n"
            << "experiment = [\"index\"]\n"
            << "outdir = \"" << (ws.dir / "from_conf").string() << "\"\n";
    }
    CHECK(run_cli("--config " + conf.string() + " analyze") == 0);
    const auto run_dir = only_run_dir(ws.dir / "from_conf");
    REQUIRE(!run_dir.empty());
    CHECK(fs::exists(run_dir / "SYN_index_p15.csv"));
    CHECK(fs::exists(run_dir / "SYN_index_p20.csv"));

    // Flag wins over the config file key.
    CHECK(run_cli("--config " + conf.string() + " analyze --outdir " +
                  (ws.dir / "flag_wins").string()) == 0);
    CHECK(!only_run_dir(ws.dir / "flag_wins").empty());
}

TEST_CASE("config and IO problems exit with 2 before analysis") {
    Workspace ws;
    CHECK(run_cli("analyze --input SYN=" + ws.input.string() + " --p 70 --outdir " +
                  (ws.dir / "x").string()) == 2);
    CHECK(run_cli("analyze --outdir " + (ws.dir / "y").string()) == 2);  // no inputs
    CHECK(run_cli("analyze --input SYN=" + ws.input.string() + " --experiment nope --outdir " +
                  (ws.dir / "z").string()) == 2);
}

TEST_CASE("a failing series exits with 1 and the rest of the run survives") {
    Workspace ws;
    const auto outdir = ws.dir / "partial";
    const int rc = run_cli("analyze --input SYN=" + ws.input.string() +
                           " --input MISSING=" + (ws.dir / "missing.csv").string() +
                           " --experiment acf --outdir " + outdir.string());
    CHECK(rc == 1);
    const auto run_dir = only_run_dir(outdir);
    REQUIRE(!run_dir.empty());
    CHECK(fs::exists(run_dir / "SYN_acf_returns.csv"));
}

TEST_CASE("an existing run directory is refused without --overwrite") {
    Workspace ws;
    const auto outdir = ws.dir / "twice";
    const std::string base = "analyze --input SYN=" + ws.input.string() +
                             " --experiment acf --outdir " + outdir.string();
    CHECK(run_cli(base) == 0);
    CHECK(run_cli(base) == 2);
    CHECK(run_cli(base + " --overwrite") == 0);
}
