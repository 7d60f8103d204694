// End-to-end tests for the command-line tool: every subcommand is exercised
// through a real subprocess, checking CSV/JSON shape, exact values, exit
// codes, config-file handling, and determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr merged
};

std::string cli_path() {
    if (const char* env = std::getenv("CLUSTERCAP_BIN")) {
        return env;
    }
#ifdef CLUSTERCAP_BIN_PATH
    return CLUSTERCAP_BIN_PATH;
#else
    FAIL("CLUSTERCAP_BIN is not set and no built-in path was compiled in");
    return "";
#endif
}

RunResult run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        res.output.append(buf, got);
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) {
        res.exit_code = WEXITSTATUS(status);
    }
    return res;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

// Returns the row whose first cell equals `key`, or an empty vector.
std::vector<std::string> find_row(const std::string& csv, const std::string& key) {
    for (const std::string& line : split_lines(csv)) {
        std::vector<std::string> cells = split_csv(line);
        if (!cells.empty() && cells[0] == key) {
            return cells;
        }
    }
    return {};
}

}  // namespace

TEST_CASE("capacity: beta-style evaluation with breakdown") {
    const RunResult r =
        run_cli("capacity -n 6 -k 5 -L 2 --alpha 10 --beta-i 5 --beta-c 0");
    REQUIRE(r.exit_code == 0);
    const std::vector<std::string> lines = split_lines(r.output);
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "field,exact,decimal");
    CHECK(find_row(r.output, "capacity") ==
          std::vector<std::string>{"capacity", "30", "30.000000000000"});
    CHECK(find_row(r.output, "n") == std::vector<std::string>{"n", "6", ""});
    CHECK(find_row(r.output, "gamma") ==
          std::vector<std::string>{"gamma", "10", "10.000000000000"});
    CHECK(find_row(r.output, "omega_5") ==
          std::vector<std::string>{"omega_5", "0", "0.000000000000"});
    CHECK(find_row(r.output, "outside_feasible") ==
          std::vector<std::string>{"outside_feasible", "0", ""});
}

TEST_CASE("capacity: gamma-style evaluation matches the closed form") {
    const RunResult r =
        run_cli("capacity -n 100 -k 85 -L 10 --alpha 1 --gamma 1 --epsilon 1");
    REQUIRE(r.exit_code == 0);
    // 4845/99 in lowest terms
    CHECK(find_row(r.output, "capacity") ==
          std::vector<std::string>{"capacity", "1615/33", "48.939393939394"});
}

TEST_CASE("capacity: decimal flags parse to exact fractions") {
    const RunResult r =
        run_cli("capacity -n 6 -k 5 -L 2 --alpha 1.05 --beta-i 5 --beta-c 0");
    REQUIRE(r.exit_code == 0);
    CHECK(find_row(r.output, "alpha") ==
          std::vector<std::string>{"alpha", "21/20", "1.050000000000"});
}

TEST_CASE("capacity: validation failures exit 2 with a message") {
    const RunResult bad_k = run_cli("capacity -n 15 -k 4 -L 3 --alpha 1 --beta-i 1 --beta-c 0");
    CHECK(bad_k.exit_code == 2);
    CHECK(bad_k.output.find("k") != std::string::npos);

    const RunResult no_style = run_cli("capacity -n 6 -k 5 -L 2 --alpha 1");
    CHECK(no_style.exit_code == 2);

    const RunResult both_styles = run_cli(
        "capacity -n 6 -k 5 -L 2 --alpha 1 --beta-i 1 --beta-c 0 --gamma 1 --epsilon 0");
    CHECK(both_styles.exit_code == 2);

    const RunResult half_style = run_cli("capacity -n 6 -k 5 -L 2 --alpha 1 --beta-i 1");
    CHECK(half_style.exit_code == 2);

    const RunResult bad_rat = run_cli("capacity -n 6 -k 5 -L 2 --alpha abc --beta-i 1 --beta-c 0");
    CHECK(bad_rat.exit_code == 2);

    const RunResult unknown = run_cli("capacity --bogus 1");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("sweep-eps: endpoints, monotonicity, and step count") {
    const RunResult r =
        run_cli("sweep-eps -n 100 -k 85 -L 10 --alpha 1 --gamma 1 --steps 11");
    REQUIRE(r.exit_code == 0);
    const std::vector<std::string> lines = split_lines(r.output);
    REQUIRE(lines.size() == 12);
    CHECK(lines[0] == "epsilon,capacity,epsilon_dec,capacity_dec");
    CHECK(split_csv(lines[1])[0] == "0");
    CHECK(split_csv(lines[11])[0] == "1");
    CHECK(split_csv(lines[11])[1] == "1615/33");
    double prev = -1.0;
    for (size_t i = 1; i < lines.size(); ++i) {
        const double c = std::stod(split_csv(lines[i])[3]);
        CHECK(c >= prev);
        prev = c;
    }
    // first row strictly smaller than the last
    CHECK(std::stod(split_csv(lines[1])[3]) < std::stod(split_csv(lines[11])[3]));

    const RunResult two = run_cli("sweep-eps -n 6 -k 5 -L 2 --alpha 10 --gamma 10 --steps 2");
    REQUIRE(two.exit_code == 0);
    const std::vector<std::string> tl = split_lines(two.output);
    REQUIRE(tl.size() == 3);
    CHECK(split_csv(tl[1])[0] == "0");
    CHECK(split_csv(tl[2])[0] == "1");

    CHECK(run_cli("sweep-eps -n 6 -k 5 -L 2 --alpha 10 --gamma 10 --steps 1").exit_code == 2);
}

TEST_CASE("sweep-l: abundant cross-cluster bandwidth stores k*alpha for every L") {
    const RunResult r = run_cli("sweep-l -n 100 -k 80 --alpha 1 --gamma 10 --epsilon 1");
    REQUIRE(r.exit_code == 0);
    const std::vector<std::string> lines = split_lines(r.output);
    CHECK(lines[0] == "L,capacity,c_bar,capacity_dec,c_bar_dec");
    REQUIRE(lines.size() == 8);  // L in {2,4,5,10,20,25,50}
    int prev_l = 0;
    for (size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string> cells = split_csv(lines[i]);
        CHECK(cells[1] == "80");
        CHECK(cells[2] == "");  // gamma != alpha, no asymptotic column
        const int L = std::stoi(cells[0]);
        CHECK(L > prev_l);
        prev_l = L;
    }
}

TEST_CASE("sweep-l: scarce cross-cluster bandwidth favors fewer clusters") {
    const RunResult r = run_cli("sweep-l -n 100 -k 80 --alpha 1 --gamma 10 --xi 1/5");
    REQUIRE(r.exit_code == 0);
    const std::vector<std::string> lines = split_lines(r.output);
    REQUIRE(lines.size() == 8);
    double prev = 1e18;
    for (size_t i = 1; i < lines.size(); ++i) {
        const double c = std::stod(split_csv(lines[i])[3]);
        CHECK(c < prev);
        prev = c;
    }
}

TEST_CASE("sweep-l: asymptotic column appears when gamma equals alpha") {
    const RunResult r = run_cli("sweep-l -n 24 -k 16 --alpha 1 --gamma 1 --xi 1/2");
    REQUIRE(r.exit_code == 0);
    const std::vector<std::string> lines = split_lines(r.output);
    REQUIRE(lines.size() > 1);
    for (size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string> cells = split_csv(lines[i]);
        REQUIRE(cells[2] != "");
        CHECK(std::stod(cells[4]) <= std::stod(cells[3]) + 1e-9);
    }
}

TEST_CASE("sweep-l: xi and epsilon are mutually exclusive and one is required") {
    CHECK(run_cli("sweep-l -n 24 -k 16 --alpha 1 --gamma 1 --xi 1/2 --epsilon 1").exit_code == 2);
    CHECK(run_cli("sweep-l -n 24 -k 16 --alpha 1 --gamma 1").exit_code == 2);
}

TEST_CASE("tradeoff: leftmost points at the three regime-defining epsilons") {
    const RunResult eps1 = run_cli("tradeoff -n 15 -k 8 -L 3 -M 8 --epsilon 1 --samples 2");
    REQUIRE(eps1.exit_code == 0);
    const std::vector<std::string> l1 = split_lines(eps1.output);
    CHECK(l1[0] == "kind,alpha,gamma_star,t,s_t,alpha_dec,gamma_star_dec");
    const std::vector<std::string> first = split_csv(l1[1]);
    CHECK(first[0] == "breakpoint");
    CHECK(first[1] == "1");
    CHECK(first[2] == "2");

    const RunResult eps0 = run_cli("tradeoff -n 15 -k 8 -L 3 -M 8 --epsilon 0 --samples 2");
    REQUIRE(eps0.exit_code == 0);
    CHECK(split_csv(split_lines(eps0.output)[1])[1] == "8/7");

    const RunResult eps17 = run_cli("tradeoff -n 15 -k 8 -L 3 -M 8 --epsilon 1/7 --samples 2");
    REQUIRE(eps17.exit_code == 0);
    CHECK(split_csv(split_lines(eps17.output)[1])[1] == "1");
}

TEST_CASE("tradeoff: samples span minimum storage to MBR") {
    const RunResult r = run_cli("tradeoff -n 15 -k 8 -L 3 -M 8 --epsilon 1 --samples 3");
    REQUIRE(r.exit_code == 0);
    std::vector<std::vector<std::string>> samples;
    for (const std::string& line : split_lines(r.output)) {
        const std::vector<std::string> cells = split_csv(line);
        if (!cells.empty() && cells[0] == "sample") {
            samples.push_back(cells);
        }
    }
    REQUIRE(samples.size() == 3);
    CHECK(samples.front()[1] == "1");
    // MBR for this system at epsilon = 1: alpha = gamma = 4/3, on the t = 0 tail
    CHECK(samples.back()[1] == "4/3");
    CHECK(samples.back()[2] == "4/3");
    CHECK(samples.back()[3] == "0");
}

TEST_CASE("betac-curve: infeasible markers below M/k and zero beyond M/k0") {
    const RunResult r = run_cli("betac-curve -n 100 -k 85 -L 10 -M 85 --samples 25");
    REQUIRE(r.exit_code == 0);
    const std::vector<std::string> lines = split_lines(r.output);
    CHECK(lines[0] == "alpha,beta_c_star,alpha_dec,beta_c_star_dec");
    bool saw_infeasible = false;
    bool saw_zero = false;
    bool saw_positive = false;
    for (size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string> cells = split_csv(lines[i]);
        const double alpha = std::stod(cells[2]);
        if (cells[1] == "Infeasible") {
            saw_infeasible = true;
            CHECK(cells[3] == "Infeasible");
            CHECK(alpha < 1.0);  // M/k = 1
        } else if (cells[1] == "0") {
            saw_zero = true;
            CHECK(alpha >= 85.0 / 77.0 - 1e-9);  // M/k0
        } else {
            saw_positive = true;
        }
    }
    CHECK(saw_infeasible);
    CHECK(saw_zero);
    CHECK(saw_positive);
}

TEST_CASE("msr-mbr: extremal points") {
    const RunResult r = run_cli("msr-mbr -n 6 -k 5 -L 2 -M 30 --epsilon 1");
    REQUIRE(r.exit_code == 0);
    const std::vector<std::string> lines = split_lines(r.output);
    CHECK(lines[0] == "kind,alpha,gamma,alpha_dec,gamma_dec");
    const std::vector<std::string> msr = split_csv(lines[1]);
    const std::vector<std::string> mbr = split_csv(lines[2]);
    CHECK(msr[0] == "msr");
    CHECK(msr[1] == "6");
    CHECK(msr[2] == "30");
    CHECK(mbr[0] == "mbr");
    CHECK(mbr[1] == "10");
    CHECK(mbr[2] == "10");
}

TEST_CASE("lrc-check: equality at minimum storage, strict when n_I divides k") {
    const RunResult eq = run_cli("lrc-check -n 15 -k 8 -L 3 -M 7 --alpha 1");
    REQUIRE(eq.exit_code == 0);
    const std::vector<std::string> lines = split_lines(eq.output);
    CHECK(lines[0] == "n,l0,m0,lhs,rhs,slack,equality");
    CHECK(lines[1] == "15,4,8,8,8,0,1");

    const RunResult strict = run_cli("lrc-check -n 12 -k 8 -L 3 -M 7 --alpha 7/6");
    REQUIRE(strict.exit_code == 0);
    CHECK(split_lines(strict.output)[1] == "12,3,5,5,6,1,0");

    CHECK(run_cli("lrc-check -n 12 -k 8 -L 3 -M 7 --alpha 1").exit_code == 2);
}

TEST_CASE("verify: suites pass on small grids and reject bad suite names") {
    const RunResult oracle = run_cli("verify oracle --max-n 5");
    CHECK(oracle.exit_code == 0);
    CHECK(oracle.output.find("verify oracle: PASS") != std::string::npos);
    CHECK(oracle.output.find("ok oracle") != std::string::npos);
    CHECK(oracle.output.find("MISMATCH") == std::string::npos);

    const RunResult flow = run_cli("verify flowgraph --max-n 4");
    CHECK(flow.exit_code == 0);
    CHECK(flow.output.find("verify flowgraph: PASS") != std::string::npos);

    const RunResult rlnc = run_cli("--seed 5 verify rlnc --trials 3");
    CHECK(rlnc.exit_code == 0);
    CHECK(rlnc.output.find("verify rlnc: PASS") != std::string::npos);
    CHECK(rlnc.output.find("full_rank=") != std::string::npos);

    CHECK(run_cli("verify bogus").exit_code == 2);
}

TEST_CASE("json format produces a parsable array with exact cells") {
    const RunResult r =
        run_cli("--format json capacity -n 6 -k 5 -L 2 --alpha 10 --beta-i 5 --beta-c 0");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json arr = nlohmann::json::parse(r.output);
    REQUIRE(arr.is_array());
    bool found = false;
    for (const auto& obj : arr) {
        if (obj.at("field") == "capacity") {
            CHECK(obj.at("exact") == "30");
            found = true;
        }
        if (obj.at("field") == "epsilon") {
            CHECK(obj.at("exact") == "0");
        }
    }
    CHECK(found);
}

TEST_CASE("json format: nullable cells render as null") {
    // beta_I = beta_c = 0 would be invalid, but beta_I > 0 with gamma = 0 is
    // impossible too; epsilon is null exactly when beta_I = 0, which needs
    // beta_c = 0 as well, i.e. a storage-only system.
    const RunResult r =
        run_cli("--format json capacity -n 6 -k 5 -L 2 --alpha 2 --beta-i 0 --beta-c 0");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json arr = nlohmann::json::parse(r.output);
    bool saw_eps = false;
    bool saw_xi = false;
    for (const auto& obj : arr) {
        if (obj.at("field") == "epsilon") {
            CHECK(obj.at("exact").is_null());
            saw_eps = true;
        }
        if (obj.at("field") == "xi") {
            CHECK(obj.at("exact").is_null());
            saw_xi = true;
        }
        if (obj.at("field") == "capacity") {
            CHECK(obj.at("exact") == "0");
        }
    }
    CHECK(saw_eps);
    CHECK(saw_xi);
}

TEST_CASE("--out writes the table to a file") {
    const std::string path = "cli_out_test.csv";
    std::remove(path.c_str());
    const RunResult r =
        run_cli("--out " + path + " sweep-eps -n 6 -k 5 -L 2 --alpha 10 --gamma 10 --steps 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "epsilon,capacity,epsilon_dec,capacity_dec");
    f.close();
    std::remove(path.c_str());
}

TEST_CASE("config file supplies flags and typed flags override it") {
    const std::string path = "cli_cfg_test.conf";
    {
        std::ofstream f(path);
        f << "# system under test\n"
          << "nodes = 6\n"
          << "contacted = 5\n"
          << "clusters = 2\n"
          << "alpha = 10\n"
          << "beta-i = 5\n"
          << "beta-c = 0  ; cross-cluster repair disabled\n";
    }
    const RunResult from_file = run_cli("capacity --config " + path);
    REQUIRE(from_file.exit_code == 0);
    CHECK(find_row(from_file.output, "capacity")[1] == "30");

    const RunResult override_after = run_cli("capacity --config " + path + " --alpha 2");
    REQUIRE(override_after.exit_code == 0);
    CHECK(find_row(override_after.output, "alpha")[1] == "2");
    CHECK(find_row(override_after.output, "capacity")[1] == "8");

    const RunResult override_before = run_cli("capacity --alpha 2 --config " + path);
    REQUIRE(override_before.exit_code == 0);
    CHECK(find_row(override_before.output, "capacity")[1] == "8");

    CHECK(run_cli("capacity --config no_such_file.conf").exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("output is deterministic across runs") {
    const std::string args = "tradeoff -n 15 -k 8 -L 3 -M 8 --epsilon 1/2 --samples 40";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("capacity --help").exit_code == 0);
    CHECK(run_cli("verify --help").exit_code == 0);
}
