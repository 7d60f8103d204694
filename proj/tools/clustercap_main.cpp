// Command-line front end: single capacity evaluations, figure-style sweeps
// emitted as CSV or JSON, and verification suites that re-derive the closed
// form from the enumeration oracle, the flow-graph min-cut, and random linear
// network coding.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "clustercap/capacity.hpp"
#include "clustercap/errors.hpp"
#include "clustercap/flowgraph.hpp"
#include "clustercap/lrc.hpp"
#include "clustercap/oracle.hpp"
#include "clustercap/params.hpp"
#include "clustercap/rational.hpp"
#include "clustercap/resources.hpp"
#include "clustercap/tradeoff.hpp"

namespace {

using namespace clustercap;
using nlohmann::json;

// ---------------------------------------------------------------------------
// Output plumbing: every data command renders one table, either as CSV
// (exact columns first, decimal twins after) or as a JSON array of objects.

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string cell_text(const json& cell) {
    if (cell.is_null()) {
        return "";
    }
    if (cell.is_string()) {
        return cell.get<std::string>();
    }
    return cell.dump();
}

std::string render_table(const Table& t, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& row : t.rows) {
            json obj = json::object();
            for (size_t i = 0; i < t.columns.size(); ++i) {
                obj[t.columns[i]] = row[i];
            }
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    for (size_t i = 0; i < t.columns.size(); ++i) {
        os << (i ? "," : "") << t.columns[i];
    }
    os << '\n';
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << cell_text(row[i]);
        }
        os << '\n';
    }
    return os.str();
}

int write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(path);
    if (!f) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return 2;
    }
    f << text;
    return 0;
}

json rat_cell(const Rat& v) { return rat_to_string(v); }
json dec_cell(const Rat& v) { return rat_to_decimal(v); }

// ---------------------------------------------------------------------------
// Config files: flat `key = value` text, one option per line, where keys are
// option names without dashes (`nodes = 100`, `beta-i = 1/2`).  CLI11 2.4 only
// processes set_config() on the root app, where flat keys cannot reach
// subcommand options, so we expand the file into tokens injected right after
// the subcommand name; every option takes the last value given, which makes
// explicitly typed flags override the file.

std::string trim_copy(const std::string& s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) {
        --e;
    }
    return s.substr(b, e - b);
}

std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    std::vector<std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) {
            line.erase(comment);
        }
        line = trim_copy(line);
        if (line.empty()) {
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        }
        std::string key = trim_copy(line.substr(0, eq));
        const std::string value = trim_copy(line.substr(eq + 1));
        while (!key.empty() && key.front() == '-') {
            key.erase(key.begin());
        }
        if (key.empty()) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": empty key");
        }
        out.push_back(key.size() == 1 ? "-" + key : "--" + key);
        if (!value.empty()) {
            out.push_back(value);
        }
    }
    return out;
}

void expand_config(std::vector<std::string>& args) {
    // Locate the subcommand token: the first non-flag token that is not the
    // value of a root option.
    static const std::vector<std::string> root_value_flags = {"--format", "--out", "--seed"};
    size_t sub = args.size();
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (!a.empty() && a.front() == '-') {
            if (std::find(root_value_flags.begin(), root_value_flags.end(), a) !=
                root_value_flags.end()) {
                ++i;  // skip the flag's value
            }
            continue;
        }
        sub = i;
        break;
    }
    if (sub == args.size()) {
        return;  // no subcommand; let the parser report it
    }
    std::string path;
    for (size_t i = sub + 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (a.rfind("--config=", 0) == 0) {
            path = a.substr(9);
        }
    }
    if (path.empty()) {
        return;
    }
    const std::vector<std::string> extra = config_tokens(path);
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub) + 1, extra.begin(), extra.end());
}

// ---------------------------------------------------------------------------
// Shared flag parsing helpers.

Rat parse_flag(const std::string& text, const char* flag) {
    try {
        return parse_rat(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(std::string(flag) + ": '" + text +
                                    "' is not an integer, fraction, or decimal");
    }
}

ResourcePoint resources_from_flags(const SystemParams& p, const std::string& alpha_s,
                                   const std::string& beta_i_s, const std::string& beta_c_s,
                                   const std::string& gamma_s, const std::string& eps_s) {
    const bool beta_style = !beta_i_s.empty() || !beta_c_s.empty();
    const bool gamma_style = !gamma_s.empty() || !eps_s.empty();
    if (beta_style == gamma_style) {
        throw std::invalid_argument(
            "give exactly one resource style: (--beta-i, --beta-c) or (--gamma, --epsilon)");
    }
    const Rat alpha = parse_flag(alpha_s, "--alpha");
    if (beta_style) {
        if (beta_i_s.empty() || beta_c_s.empty()) {
            throw std::invalid_argument("--beta-i and --beta-c must be given together");
        }
        return make_resources(p, alpha, parse_flag(beta_i_s, "--beta-i"),
                              parse_flag(beta_c_s, "--beta-c"));
    }
    if (gamma_s.empty() || eps_s.empty()) {
        throw std::invalid_argument("--gamma and --epsilon must be given together");
    }
    return make_resources_gamma(p, alpha, parse_flag(gamma_s, "--gamma"),
                                parse_flag(eps_s, "--epsilon"));
}

// ---------------------------------------------------------------------------
// capacity

Table run_capacity(const SystemParams& p, const ResourcePoint& r) {
    const CapacityBreakdown b = capacity(p, r);
    Table t;
    t.columns = {"field", "exact", "decimal"};
    auto int_row = [&](const char* name, int v) {
        t.rows.push_back({name, v, json()});
    };
    auto rat_row = [&](const std::string& name, const Rat& v) {
        t.rows.push_back({name, rat_cell(v), dec_cell(v)});
    };
    int_row("n", p.n);
    int_row("k", p.k);
    int_row("L", p.L);
    int_row("n_I", p.n_I);
    rat_row("alpha", r.alpha);
    rat_row("beta_i", r.beta_I);
    rat_row("beta_c", r.beta_c);
    rat_row("gamma_i", r.gamma_I);
    rat_row("gamma_c", r.gamma_c);
    rat_row("gamma", r.gamma);
    if (r.epsilon.has_value()) {
        rat_row("epsilon", *r.epsilon);
    } else {
        t.rows.push_back({"epsilon", json(), json()});
    }
    if (r.xi.has_value()) {
        rat_row("xi", *r.xi);
    } else {
        t.rows.push_back({"xi", json(), json()});
    }
    int_row("outside_feasible", b.outside_feasible ? 1 : 0);
    rat_row("capacity", b.total);
    for (int i = 0; i < p.k; ++i) {
        rat_row("omega_" + std::to_string(i + 1), b.omegas[static_cast<size_t>(i)]);
    }
    for (int i = 0; i < p.k; ++i) {
        rat_row("term_" + std::to_string(i + 1), b.terms[static_cast<size_t>(i)]);
    }
    return t;
}

// ---------------------------------------------------------------------------
// sweep-eps

Table run_sweep_eps(const SystemParams& p, const Rat& alpha, const Rat& gamma, int steps) {
    if (steps < 2) {
        throw std::invalid_argument("--steps must be at least 2");
    }
    Table t;
    t.columns = {"epsilon", "capacity", "epsilon_dec", "capacity_dec"};
    for (int j = 0; j < steps; ++j) {
        const Rat eps(j, steps - 1);
        const Rat c = capacity_gamma_form(p, alpha, gamma, eps).total;
        t.rows.push_back({rat_cell(eps), rat_cell(c), dec_cell(eps), dec_cell(c)});
    }
    return t;
}

// ---------------------------------------------------------------------------
// sweep-l

Table run_sweep_l(int n, int k, const Rat& alpha, const Rat& gamma,
                  const std::optional<Rat>& xi, const std::optional<Rat>& eps) {
    if (xi.has_value() == eps.has_value()) {
        throw std::invalid_argument("give exactly one of --xi or --epsilon");
    }
    Table t;
    t.columns = {"L", "capacity", "c_bar", "capacity_dec", "c_bar_dec"};
    for (int L = 2; L * 2 <= n; ++L) {
        if (n % L != 0 || n / L < 2 || k <= n / L) {
            continue;
        }
        const SystemParams p = validate_params(n, k, L);
        ResourcePoint r;
        try {
            r = xi.has_value() ? make_resources_xi(p, alpha, gamma, *xi)
                               : make_resources_gamma(p, alpha, gamma, *eps);
        } catch (const InvalidResourceError&) {
            continue;  // this split makes beta_c > beta_I; skip the row
        }
        const Rat c = capacity(p, r).total;
        json c_bar;
        json c_bar_dec;
        if (r.gamma == r.alpha) {
            const Rat cb = asymptotic_bounds(p, r).c_bar;
            c_bar = rat_cell(cb);
            c_bar_dec = dec_cell(cb);
        }
        t.rows.push_back({L, rat_cell(c), c_bar, dec_cell(c), c_bar_dec});
    }
    if (t.rows.empty()) {
        throw std::invalid_argument("no cluster count L >= 2 divides n with n_I >= 2 and k > n_I");
    }
    return t;
}

// ---------------------------------------------------------------------------
// tradeoff

Table run_tradeoff(const SystemParams& p, const Rat& M, const Rat& eps, int samples) {
    if (samples < 2) {
        throw std::invalid_argument("--samples must be at least 2");
    }
    const TradeoffCurve curve = tradeoff_curve(p, eps, M);
    const ExtremalPoint mbr = mbr_point(p, eps, M);

    Table t;
    t.columns = {"kind", "alpha", "gamma_star", "t", "s_t", "alpha_dec", "gamma_star_dec"};
    auto add_point = [&](const char* kind, const Rat& alpha) {
        const std::optional<Rat> g = curve_evaluate(curve, alpha);
        if (!g.has_value()) {
            throw std::logic_error("internal invariant violated: sampled alpha must be feasible");
        }
        const CurveSegment* seg = nullptr;
        for (const CurveSegment& s : curve.segments) {
            if (alpha >= s.alpha_lo && (s.alpha_hi.infinite || alpha < s.alpha_hi.value)) {
                seg = &s;
                break;
            }
        }
        if (seg == nullptr) {
            throw std::logic_error("internal invariant violated: curve must cover sampled alpha");
        }
        t.rows.push_back({kind, rat_cell(alpha), rat_cell(*g), seg->t, rat_cell(seg->s_t),
                          dec_cell(alpha), dec_cell(*g)});
    };

    for (const CurveSegment& seg : curve.segments) {
        add_point("breakpoint", seg.alpha_lo);
    }
    const Rat lo = curve.infeasible_below;
    const Rat hi = mbr.alpha;
    for (int i = 0; i < samples; ++i) {
        add_point("sample", lo + (hi - lo) * Rat(i, samples - 1));
    }
    return t;
}

// ---------------------------------------------------------------------------
// betac-curve

Table run_betac_curve(const SystemParams& p, const Rat& M, int samples) {
    if (samples < 2) {
        throw std::invalid_argument("--samples must be at least 2");
    }
    const int k0 = p.k - p.k / p.n_I;
    const Rat lo = Rat(19, 20) * M / Rat(p.k);
    const Rat hi = Rat(6, 5) * M / Rat(k0);
    Table t;
    t.columns = {"alpha", "beta_c_star", "alpha_dec", "beta_c_star_dec"};
    for (int i = 0; i < samples; ++i) {
        const Rat alpha = lo + (hi - lo) * Rat(i, samples - 1);
        const std::optional<Rat> b = beta_c_star(p, M, alpha);
        if (b.has_value()) {
            t.rows.push_back({rat_cell(alpha), rat_cell(*b), dec_cell(alpha), dec_cell(*b)});
        } else {
            t.rows.push_back({rat_cell(alpha), "Infeasible", dec_cell(alpha), "Infeasible"});
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// msr-mbr

Table run_msr_mbr(const SystemParams& p, const Rat& M, const Rat& eps) {
    Table t;
    t.columns = {"kind", "alpha", "gamma", "alpha_dec", "gamma_dec"};
    const ExtremalPoint msr = msr_point(p, eps, M);
    const ExtremalPoint mbr = mbr_point(p, eps, M);
    t.rows.push_back(
        {"msr", rat_cell(msr.alpha), rat_cell(msr.gamma), dec_cell(msr.alpha), dec_cell(msr.gamma)});
    t.rows.push_back(
        {"mbr", rat_cell(mbr.alpha), rat_cell(mbr.gamma), dec_cell(mbr.alpha), dec_cell(mbr.gamma)});
    return t;
}

// ---------------------------------------------------------------------------
// lrc-check

Table run_lrc_check(const SystemParams& p, const Rat& M, const Rat& alpha) {
    const LrcBoundReport rep = lrc_bound_check(irc_lrc_params(p, M, alpha));
    Table t;
    t.columns = {"n", "l0", "m0", "lhs", "rhs", "slack", "equality"};
    t.rows.push_back({p.n, p.n_I - 1, p.n - p.k + 1, rep.lhs.convert_to<long long>(),
                      rep.rhs.convert_to<long long>(), rep.slack.convert_to<long long>(),
                      rep.equality ? 1 : 0});
    return t;
}

// ---------------------------------------------------------------------------
// verify

std::vector<SystemParams> verify_grid(int max_n) {
    std::vector<SystemParams> out;
    for (int n = 4; n <= max_n; ++n) {
        for (int L = 2; L * 2 <= n; ++L) {
            if (n % L != 0 || n / L < 2) {
                continue;
            }
            for (int k = n / L + 1; k <= std::min(n, 9); ++k) {
                out.push_back(validate_params(n, k, L));
            }
        }
    }
    return out;
}

// The acceptance resource bands: beta_I in {1, 1/2}, beta_c in {0, 1/4,
// beta_I}, alpha in {small, middle breakpoint, large}.
std::vector<ResourcePoint> verify_bands(const SystemParams& p) {
    const std::pair<Rat, Rat> betas[] = {{Rat(1), Rat(0)},      {Rat(1), Rat(1, 4)},
                                         {Rat(1), Rat(1)},      {Rat(1, 2), Rat(0)},
                                         {Rat(1, 2), Rat(1, 4)}, {Rat(1, 2), Rat(1, 2)}};
    std::vector<ResourcePoint> out;
    for (const auto& [beta_i, beta_c] : betas) {
        const ResourcePoint probe = make_resources(p, Rat(1), beta_i, beta_c);
        const std::vector<Rat> omegas = capacity(p, probe).omegas;
        Rat smallest = omegas.front();  // omega_1 = gamma > 0
        for (const Rat& w : omegas) {
            if (w > 0 && w < smallest) {
                smallest = w;
            }
        }
        Rat breakpoint = omegas[static_cast<size_t>((p.k - 1) / 2)];
        if (breakpoint == 0) {
            breakpoint = omegas.front();
        }
        const Rat alphas[] = {smallest / 2, breakpoint, probe.gamma + 1};
        for (const Rat& alpha : alphas) {
            out.push_back(make_resources(p, alpha, beta_i, beta_c));
        }
    }
    return out;
}

std::string describe(const SystemParams& p, const ResourcePoint& r) {
    std::ostringstream os;
    os << "n=" << p.n << " k=" << p.k << " L=" << p.L << " alpha=" << rat_to_string(r.alpha)
       << " beta_i=" << rat_to_string(r.beta_I) << " beta_c=" << rat_to_string(r.beta_c);
    return os.str();
}

int verify_oracle(std::ostream& os, int max_n) {
    int failures = 0;
    for (const SystemParams& p : verify_grid(max_n)) {
        for (const ResourcePoint& r : verify_bands(p)) {
            const Rat closed = capacity(p, r).total;
            const BruteForceResult bf = brute_force_capacity(p, r);
            if (bf.capacity == closed) {
                os << "ok oracle " << describe(p, r) << " C=" << rat_to_string(closed) << '\n';
            } else {
                ++failures;
                os << "MISMATCH oracle " << describe(p, r) << " closed=" << rat_to_string(closed)
                   << " enumerated=" << rat_to_string(bf.capacity) << " s=[";
                for (size_t i = 0; i < bf.argmin_s.s.size(); ++i) {
                    os << (i ? " " : "") << bf.argmin_s.s[i];
                }
                os << "] pi=[";
                for (size_t i = 0; i < bf.argmin_pi.pi.size(); ++i) {
                    os << (i ? " " : "") << bf.argmin_pi.pi[i];
                }
                os << "]\n";
            }
        }
    }
    return failures;
}

int verify_flowgraph(std::ostream& os, int max_n, const std::string& dump_path) {
    int failures = 0;
    std::ostringstream dumps;
    for (const SystemParams& p : verify_grid(max_n)) {
        for (const ResourcePoint& r : verify_bands(p)) {
            const Rat closed = capacity(p, r).total;
            const FlowGraph g = build_gstar(p, r);
            if (!dump_path.empty()) {
                dumps << dump_graph(g) << '\n';
            }
            const CutValue cut = min_cut(g);
            if (!cut.value.infinite && cut.value.value == closed) {
                os << "ok flowgraph " << describe(p, r) << " min_cut=" << rat_to_string(closed)
                   << '\n';
            } else {
                ++failures;
                os << "MISMATCH flowgraph " << describe(p, r)
                   << " closed=" << rat_to_string(closed)
                   << " min_cut=" << ext_to_string(cut.value) << '\n';
            }
        }
    }
    if (!dump_path.empty()) {
        std::ofstream f(dump_path);
        if (!f) {
            throw std::invalid_argument("cannot open dump file '" + dump_path + "'");
        }
        f << dumps.str();
    }
    return failures;
}

int verify_rlnc(std::ostream& os, int trials, std::uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("--trials must be at least 1");
    }
    struct Sys {
        int n, k, L;
    };
    const Sys systems[] = {{6, 5, 2}, {8, 5, 2}};
    int failures = 0;
    for (const Sys& s : systems) {
        const SystemParams p = validate_params(s.n, s.k, s.L);
        const ResourcePoint r = make_resources(p, Rat(4), Rat(2), Rat(1));
        const Rat closed = capacity(p, r).total;
        const int file_units = static_cast<int>(num(closed).convert_to<long long>());
        const FlowGraph g = build_gstar(p, r);
        int successes = 0;
        for (int t = 0; t < trials; ++t) {
            if (rlnc_rank(g, file_units, 16, seed + static_cast<std::uint64_t>(t)) == file_units) {
                ++successes;
            }
        }
        const int required = 9 * trials / 10;
        if (successes >= required) {
            os << "ok rlnc " << describe(p, r) << " file_units=" << file_units
               << " full_rank=" << successes << "/" << trials << '\n';
        } else {
            ++failures;
            os << "FAIL rlnc " << describe(p, r) << " file_units=" << file_units
               << " full_rank=" << successes << "/" << trials << " required=" << required << '\n';
        }
    }
    return failures;
}

int run_verify(const std::string& suite, int max_n, int trials, std::uint64_t seed,
               const std::string& dump_path, const std::string& out_path) {
    std::ostringstream os;
    int failures = 0;
    if (suite == "oracle" || suite == "all") {
        failures += verify_oracle(os, max_n);
    }
    if (suite == "flowgraph" || suite == "all") {
        failures += verify_flowgraph(os, max_n, dump_path);
    }
    if (suite == "rlnc" || suite == "all") {
        failures += verify_rlnc(os, trials, seed);
    }
    os << "verify " << suite << ": " << (failures == 0 ? "PASS" : "FAIL") << " (" << failures
       << " mismatches)\n";
    const int rc = write_output(out_path, os.str());
    if (rc != 0) {
        return rc;
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact capacity and resource tradeoffs for clustered distributed storage"};
    app.require_subcommand(1);
    // Last value wins, so config-file tokens (injected first) lose to flags.
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    std::string config_path;  // consumed by expand_config before parsing
    std::string format = "csv";
    std::string out_path;
    std::uint64_t seed = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to this file instead of stdout");
    app.add_option("--seed", seed, "seed for randomized verification")->capture_default_str();

    // capacity
    auto* cap_cmd =
        app.add_subcommand("capacity", "closed-form capacity with a term-by-term breakdown");
    int cap_n = 0, cap_k = 0, cap_L = 0;
    std::string cap_alpha, cap_beta_i, cap_beta_c, cap_gamma, cap_eps;
    cap_cmd->fallthrough();
    cap_cmd->add_option("--config", config_path, "flat key = value file; flags override");
    cap_cmd->add_option("-n,--nodes", cap_n, "total number of nodes")->required();
    cap_cmd->add_option("-k,--contacted", cap_k, "nodes contacted by the collector")->required();
    cap_cmd->add_option("-L,--clusters", cap_L, "number of clusters")->required();
    cap_cmd->add_option("--alpha", cap_alpha, "per-node storage")->required();
    cap_cmd->add_option("--beta-i", cap_beta_i, "intra-cluster per-helper bandwidth");
    cap_cmd->add_option("--beta-c", cap_beta_c, "cross-cluster per-helper bandwidth");
    cap_cmd->add_option("--gamma", cap_gamma, "total repair bandwidth");
    cap_cmd->add_option("--epsilon", cap_eps, "beta_c/beta_I ratio");

    // sweep-eps
    auto* eps_cmd = app.add_subcommand("sweep-eps", "capacity over evenly spaced epsilon in [0,1]");
    int eps_n = 0, eps_k = 0, eps_L = 0, eps_steps = 11;
    std::string eps_alpha, eps_gamma;
    eps_cmd->fallthrough();
    eps_cmd->add_option("--config", config_path, "flat key = value file; flags override");
    eps_cmd->add_option("-n,--nodes", eps_n, "total number of nodes")->required();
    eps_cmd->add_option("-k,--contacted", eps_k, "nodes contacted by the collector")->required();
    eps_cmd->add_option("-L,--clusters", eps_L, "number of clusters")->required();
    eps_cmd->add_option("--alpha", eps_alpha, "per-node storage")->required();
    eps_cmd->add_option("--gamma", eps_gamma, "total repair bandwidth")->required();
    eps_cmd->add_option("--steps", eps_steps, "number of sweep points (>= 2)")
        ->capture_default_str();

    // sweep-l
    auto* swl_cmd = app.add_subcommand("sweep-l", "capacity for every valid cluster count L");
    int swl_n = 0, swl_k = 0;
    std::string swl_alpha, swl_gamma, swl_xi, swl_eps;
    swl_cmd->fallthrough();
    swl_cmd->add_option("--config", config_path, "flat key = value file; flags override");
    swl_cmd->add_option("-n,--nodes", swl_n, "total number of nodes")->required();
    swl_cmd->add_option("-k,--contacted", swl_k, "nodes contacted by the collector")->required();
    swl_cmd->add_option("--alpha", swl_alpha, "per-node storage")->required();
    swl_cmd->add_option("--gamma", swl_gamma, "total repair bandwidth")->required();
    auto* swl_xi_opt = swl_cmd->add_option("--xi", swl_xi, "gamma_c/gamma ratio, fixed across L");
    auto* swl_eps_opt =
        swl_cmd->add_option("--epsilon", swl_eps, "beta_c/beta_I ratio, fixed across L");
    swl_xi_opt->excludes(swl_eps_opt);

    // tradeoff
    auto* tr_cmd =
        app.add_subcommand("tradeoff", "minimum-bandwidth curve gamma*(alpha) at fixed file size");
    int tr_n = 0, tr_k = 0, tr_L = 0, tr_samples = 200;
    std::string tr_M, tr_eps;
    tr_cmd->fallthrough();
    tr_cmd->add_option("--config", config_path, "flat key = value file; flags override");
    tr_cmd->add_option("-n,--nodes", tr_n, "total number of nodes")->required();
    tr_cmd->add_option("-k,--contacted", tr_k, "nodes contacted by the collector")->required();
    tr_cmd->add_option("-L,--clusters", tr_L, "number of clusters")->required();
    tr_cmd->add_option("-M,--file-size", tr_M, "file size")->required();
    tr_cmd->add_option("--epsilon", tr_eps, "beta_c/beta_I ratio")->required();
    tr_cmd->add_option("--samples", tr_samples, "sampled points between MSR and MBR (>= 2)")
        ->capture_default_str();

    // betac-curve
    auto* bc_cmd = app.add_subcommand(
        "betac-curve", "minimum cross-cluster bandwidth beta_c*(alpha) when beta_I = alpha");
    int bc_n = 0, bc_k = 0, bc_L = 0, bc_samples = 200;
    std::string bc_M;
    bc_cmd->fallthrough();
    bc_cmd->add_option("--config", config_path, "flat key = value file; flags override");
    bc_cmd->add_option("-n,--nodes", bc_n, "total number of nodes")->required();
    bc_cmd->add_option("-k,--contacted", bc_k, "nodes contacted by the collector")->required();
    bc_cmd->add_option("-L,--clusters", bc_L, "number of clusters")->required();
    bc_cmd->add_option("-M,--file-size", bc_M, "file size")->required();
    bc_cmd->add_option("--samples", bc_samples, "sampled alpha values (>= 2)")
        ->capture_default_str();

    // msr-mbr
    auto* mm_cmd = app.add_subcommand("msr-mbr", "extremal points of the tradeoff curve");
    int mm_n = 0, mm_k = 0, mm_L = 0;
    std::string mm_M, mm_eps;
    mm_cmd->fallthrough();
    mm_cmd->add_option("--config", config_path, "flat key = value file; flags override");
    mm_cmd->add_option("-n,--nodes", mm_n, "total number of nodes")->required();
    mm_cmd->add_option("-k,--contacted", mm_k, "nodes contacted by the collector")->required();
    mm_cmd->add_option("-L,--clusters", mm_L, "number of clusters")->required();
    mm_cmd->add_option("-M,--file-size", mm_M, "file size")->required();
    mm_cmd->add_option("--epsilon", mm_eps, "beta_c/beta_I ratio")->required();

    // lrc-check
    auto* lrc_cmd = app.add_subcommand(
        "lrc-check", "locality / minimum-distance bound for the epsilon = 0 induced code");
    int lrc_n = 0, lrc_k = 0, lrc_L = 0;
    std::string lrc_M, lrc_alpha;
    lrc_cmd->fallthrough();
    lrc_cmd->add_option("--config", config_path, "flat key = value file; flags override");
    lrc_cmd->add_option("-n,--nodes", lrc_n, "total number of nodes")->required();
    lrc_cmd->add_option("-k,--contacted", lrc_k, "nodes contacted by the collector")->required();
    lrc_cmd->add_option("-L,--clusters", lrc_L, "number of clusters")->required();
    lrc_cmd->add_option("-M,--file-size", lrc_M, "file size")->required();
    lrc_cmd->add_option("--alpha", lrc_alpha, "per-symbol storage")->required();

    // verify
    auto* ver_cmd =
        app.add_subcommand("verify", "re-derive closed-form results from independent oracles");
    std::string ver_suite;
    int ver_max_n = 8, ver_trials = 10;
    std::string ver_dump;
    ver_cmd->fallthrough();
    ver_cmd->add_option("--config", config_path, "flat key = value file; flags override");
    ver_cmd->add_option("suite", ver_suite, "oracle | flowgraph | rlnc | all")
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw)
        ->check(CLI::IsMember({"oracle", "flowgraph", "rlnc", "all"}));
    ver_cmd->add_option("--max-n", ver_max_n, "largest node count in the grid")
        ->check(CLI::Range(4, 12))
        ->capture_default_str();
    ver_cmd->add_option("--trials", ver_trials, "coding trials per configuration")
        ->capture_default_str();
    ver_cmd->add_option("--dump", ver_dump, "write flow-graph dumps to this file");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        expand_config(args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Table table;
        if (app.got_subcommand(cap_cmd)) {
            const SystemParams p = validate_params(cap_n, cap_k, cap_L);
            table = run_capacity(
                p, resources_from_flags(p, cap_alpha, cap_beta_i, cap_beta_c, cap_gamma, cap_eps));
        } else if (app.got_subcommand(eps_cmd)) {
            const SystemParams p = validate_params(eps_n, eps_k, eps_L);
            table = run_sweep_eps(p, parse_flag(eps_alpha, "--alpha"),
                                  parse_flag(eps_gamma, "--gamma"), eps_steps);
        } else if (app.got_subcommand(swl_cmd)) {
            std::optional<Rat> xi;
            std::optional<Rat> eps;
            if (!swl_xi.empty()) {
                xi = parse_flag(swl_xi, "--xi");
            }
            if (!swl_eps.empty()) {
                eps = parse_flag(swl_eps, "--epsilon");
            }
            table = run_sweep_l(swl_n, swl_k, parse_flag(swl_alpha, "--alpha"),
                                parse_flag(swl_gamma, "--gamma"), xi, eps);
        } else if (app.got_subcommand(tr_cmd)) {
            const SystemParams p = validate_params(tr_n, tr_k, tr_L);
            table = run_tradeoff(p, parse_flag(tr_M, "--file-size"),
                                 parse_flag(tr_eps, "--epsilon"), tr_samples);
        } else if (app.got_subcommand(bc_cmd)) {
            const SystemParams p = validate_params(bc_n, bc_k, bc_L);
            table = run_betac_curve(p, parse_flag(bc_M, "--file-size"), bc_samples);
        } else if (app.got_subcommand(mm_cmd)) {
            const SystemParams p = validate_params(mm_n, mm_k, mm_L);
            table = run_msr_mbr(p, parse_flag(mm_M, "--file-size"),
                                parse_flag(mm_eps, "--epsilon"));
        } else if (app.got_subcommand(lrc_cmd)) {
            const SystemParams p = validate_params(lrc_n, lrc_k, lrc_L);
            table = run_lrc_check(p, parse_flag(lrc_M, "--file-size"),
                                  parse_flag(lrc_alpha, "--alpha"));
        } else if (app.got_subcommand(ver_cmd)) {
            return run_verify(ver_suite, ver_max_n, ver_trials, seed, ver_dump, out_path);
        }
        return write_output(out_path, render_table(table, format));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        // Internal invariant failures are bugs, not bad input; still exit 2
        // but mark them clearly.
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
