// Command-line front end for the frhopf shared library. Everything
// numerical happens behind the C API; this tool handles configuration,
// output formatting and exit codes.
//
// Exit codes: classify returns 0 = Stable, 2 = HopfCandidate,
// 3 = Indeterminate; every command returns 1 on error, 0 otherwise.

#include <frhopf.h>

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

using nlohmann::json;

namespace {

// ----------------------------------------------------------------- utils

/// Shortest decimal form that parses back to the identical double.
std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        std::size_t b = item.find_first_not_of(" \t");
        std::size_t e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    return out;
}

std::vector<double> parse_doubles(const std::string& text, const char* what) {
    std::vector<double> out;
    for (const auto& tok : split_list(text)) {
        try {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::runtime_error(std::string("could not parse ") + what + " value '" + tok + "'");
        }
    }
    return out;
}

[[noreturn]] void die(const std::string& msg) {
    std::cerr << "frhopf: error: " << msg << "\n";
    std::exit(1);
}

void check(frh_status st, const std::string& context) {
    if (st != FRH_OK)
        die(context + ": " + frh_status_name(st) +
            (frh_last_error()[0] ? std::string(" (") + frh_last_error() + ")" : ""));
}

// ------------------------------------------------------------ config file

/// Flat sectioned key-value config. Lines are `key = value`, sections are
/// `[name]`, and `#`/`;` start comments.
struct Config {
    std::map<std::string, std::map<std::string, std::string>> sections;

    bool has(const std::string& sec, const std::string& key) const {
        auto s = sections.find(sec);
        return s != sections.end() && s->second.count(key) > 0;
    }
    std::string get(const std::string& sec, const std::string& key,
                    const std::string& fallback = "") const {
        auto s = sections.find(sec);
        if (s == sections.end()) return fallback;
        auto k = s->second.find(key);
        return k == s->second.end() ? fallback : k->second;
    }
    void set(const std::string& sec, const std::string& key, const std::string& value) {
        sections[sec][key] = value;
    }
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Config parse_ini(const std::string& text) {
    Config cfg;
    std::string section = "";
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                die("config line " + std::to_string(lineno) + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            die("config line " + std::to_string(lineno) + ": expected key = value");
        cfg.set(section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

/// Accepts either the INI format or a previously emitted JSON sidecar
/// (recognized by a leading '{'), which embeds the full effective config.
Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) die("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded()) die("config file '" + path + "' is not valid JSON");
        Config cfg;
        if (!j.contains("command") || !j["command"].is_object())
            die("JSON config is missing the 'command' object");
        const json& cmd = j["command"];
        for (auto& [sec, obj] : cmd.items()) {
            if (!obj.is_object()) {
                if (obj.is_string()) cfg.set("command", sec, obj.get<std::string>());
                continue;
            }
            std::string section = sec == "options" ? "command" : sec;
            for (auto& [key, val] : obj.items()) {
                if (val.is_string()) cfg.set(section, key, val.get<std::string>());
                else cfg.set(section, key, val.dump());
            }
        }
        return cfg;
    }
    return parse_ini(text);
}

// ------------------------------------------------------------- system

struct SystemHandle {
    frh_system* sys = nullptr;
    ~SystemHandle() { frh_system_free(sys); }
};

const char* kDemoKKeys[9] = {"k11", "k12", "k13", "k21", "k22", "k23", "k31", "k32", "k33"};
const double kDemoKDefaults[9] = {2, 2, 2, -2, -2, 2, -2, 1, -2};

/// Builds the system from [system]; also canonicalizes the section so the
/// sidecar round-trips bit-exactly.
void build_system(const Config& cfg, SystemHandle& handle, Config& canonical) {
    const double alpha = cfg.has("system", "alpha")
                             ? parse_doubles(cfg.get("system", "alpha"), "alpha").at(0)
                             : 1.1;
    canonical.set("system", "alpha", fmt_double(alpha));

    const std::string builtin = cfg.get("system", "builtin");
    const bool has_expr = cfg.has("system", "degree");
    if (!builtin.empty() && has_expr)
        die("config declares both a builtin system and coefficient expressions");

    if (!builtin.empty() || !has_expr) {
        if (!builtin.empty() && builtin != "hopfield3")
            die("unknown builtin system '" + builtin + "' (expected hopfield3)");
        double k[9];
        for (int i = 0; i < 9; ++i) {
            k[i] = cfg.has("system", kDemoKKeys[i])
                       ? parse_doubles(cfg.get("system", kDemoKKeys[i]), kDemoKKeys[i]).at(0)
                       : kDemoKDefaults[i];
            canonical.set("system", kDemoKKeys[i], fmt_double(k[i]));
        }
        canonical.set("system", "builtin", "hopfield3");
        check(frh_system_create_demo(alpha, k, &handle.sys), "creating builtin system");
        return;
    }

    int degree = 0;
    try {
        degree = std::stoi(cfg.get("system", "degree"));
    } catch (const std::exception&) {
        die("bad degree '" + cfg.get("system", "degree") + "'");
    }
    if (degree < 1) die("degree must be >= 1");
    canonical.set("system", "degree", std::to_string(degree));

    auto params = split_list(cfg.get("system", "params"));
    if (params.size() == 1 && params[0].empty()) params.clear();
    std::vector<const char*> param_ptrs;
    std::string params_joined;
    for (const auto& p : params) {
        param_ptrs.push_back(p.c_str());
        if (!params_joined.empty()) params_joined += ",";
        params_joined += p;
    }
    canonical.set("system", "params", params_joined);

    std::vector<std::string> exprs;
    std::vector<const char*> expr_ptrs;
    for (int i = 1; i <= degree; ++i) {
        std::string key = "a" + std::to_string(i);
        if (!cfg.has("system", key)) die("missing coefficient expression '" + key + "'");
        exprs.push_back(cfg.get("system", key));
        canonical.set("system", key, exprs.back());
    }
    for (const auto& e : exprs) expr_ptrs.push_back(e.c_str());

    check(frh_system_create_expr(degree, expr_ptrs.data(), param_ptrs.data(),
                                 static_cast<int>(param_ptrs.size()), alpha, &handle.sys),
          "creating expression system");
}

std::vector<double> require_mu(const frh_system* sys, const std::string& text) {
    auto mu = parse_doubles(text, "mu");
    if (static_cast<int>(mu.size()) != frh_system_param_count(sys))
        die("expected " + std::to_string(frh_system_param_count(sys)) + " parameter values, got " +
            std::to_string(mu.size()));
    return mu;
}

// ----------------------------------------------------------- sidecar

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string canonical_text(const Config& canonical) {
    std::string out;
    for (const auto& [sec, kv] : canonical.sections)
        for (const auto& [key, value] : kv) out += sec + "." + key + "=" + value + "\n";
    return out;
}

json tolerance_json() {
    frh_tolerances tol;
    frh_default_tolerances(&tol);
    return json{{"minor_rel", tol.minor_rel},       {"pivot_tol", tol.pivot_tol},
                {"arg_tol", tol.arg_tol},           {"zero_modulus", tol.zero_modulus},
                {"grad_rel", tol.grad_rel},         {"eig_rel", tol.eig_rel},
                {"root_residual", tol.root_residual}, {"refine_rel", tol.refine_rel}};
}

void write_sidecar(const std::string& csv_path, const std::string& command,
                   const Config& canonical) {
    json cmd;
    for (const auto& [sec, kv] : canonical.sections) {
        std::string key = sec == "command" ? "options" : sec;
        for (const auto& [k, v] : kv) cmd[key][k] = v;
    }
    cmd["name"] = command;
    json sidecar{{"config_hash", [&] {
                      char buf[32];
                      snprintf(buf, sizeof buf, "%016llx",
                               static_cast<unsigned long long>(fnv1a(canonical_text(canonical))));
                      return std::string(buf);
                  }()},
                 {"tolerances", tolerance_json()},
                 {"version", frh_version()},
                 {"command", cmd}};
    std::ofstream out(csv_path + ".json");
    if (!out) die("cannot write sidecar next to '" + csv_path + "'");
    out << sidecar.dump(2) << "\n";
}

// ----------------------------------------------------------- commands

const char* verdict_name(frh_verdict v) {
    switch (v) {
        case FRH_STABLE: return "Stable";
        case FRH_HOPF_CANDIDATE: return "HopfCandidate";
        case FRH_INDETERMINATE: return "Indeterminate";
    }
    return "?";
}

const char* transversality_name(frh_transversality t) {
    switch (t) {
        case FRH_TRANSVERSAL: return "Transversal";
        case FRH_DEGENERATE_STATIONARY: return "DegenerateStationary";
        case FRH_INCONCLUSIVE: return "Inconclusive";
    }
    return "?";
}

const char* definiteness_name(frh_definiteness d) {
    switch (d) {
        case FRH_HESS_INDEFINITE: return "Indefinite";
        case FRH_HESS_POS_DEFINITE: return "PosDefinite";
        case FRH_HESS_NEG_DEFINITE: return "NegDefinite";
        case FRH_HESS_SEMIDEFINITE: return "Semidefinite";
        case FRH_HESS_NOT_COMPUTED: return "NotComputed";
    }
    return "?";
}

int transversality_flag(frh_transversality t) {
    switch (t) {
        case FRH_TRANSVERSAL: return 1;
        case FRH_DEGENERATE_STATIONARY: return 0;
        case FRH_INCONCLUSIVE: return -1;
    }
    return -1;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) die("cannot write output file '" + path + "'");
    return file;
}

int cmd_classify(const frh_system* sys, const std::vector<double>& mu, const std::string& out_path,
                 const std::string& format) {
    frh_report* report = nullptr;
    frh_status st = frh_classify(sys, mu.data(), &report);
    if (st != FRH_OK)
        die(std::string("classify: ") + frh_status_name(st) + " (" + frh_last_error() + ")");

    const int n = frh_report_degree(report);
    std::vector<double> coeffs(n), leading(n);
    double auxiliary = 0.0;
    frh_report_coefficients(report, coeffs.data());
    frh_report_minors(report, leading.data(), &auxiliary);
    const frh_verdict verdict = frh_report_verdict(report);
    const double r0 = frh_report_critical_radius(report);
    int s_stable = 0, s_crit = 0, s_unst = 0, s_zero = 0;
    frh_report_sector_counts(report, &s_stable, &s_crit, &s_unst, &s_zero);

    std::ofstream file;
    std::ostream& os = open_output(file, out_path);

    if (format == "json") {
        json j;
        j["alpha"] = frh_system_alpha(sys);
        j["mu"] = mu;
        j["coefficients"] = coeffs;
        j["minors"] = leading;
        j["auxiliary_minor"] = auxiliary;
        j["verdict"] = verdict_name(verdict);
        if (verdict == FRH_HOPF_CANDIDATE) {
            j["critical_radius"] = r0;
            double re = 0, im = 0;
            frh_report_critical_pair(report, &re, &im);
            j["critical_pair"] = {{"re", re}, {"im", im}};
        }
        json roots = json::array();
        for (int i = 0; i < frh_report_root_count(report); ++i) {
            double re, im, mod, arg;
            frh_report_root(report, i, &re, &im, &mod, &arg);
            roots.push_back({{"re", re}, {"im", im}, {"modulus", mod}, {"argument", arg}});
        }
        j["roots"] = roots;
        j["sector_counts"] = {{"stable", s_stable}, {"critical", s_crit},
                              {"unstable", s_unst}, {"zero", s_zero}};
        os << j.dump(2) << "\n";
    } else {
        os << "alpha = " << fmt_double(frh_system_alpha(sys)) << "\n";
        for (int i = 0; i < n; ++i)
            os << "a" << i + 1 << " = " << fmt_double(coeffs[i]) << "\n";
        for (int i = 0; i < n; ++i)
            os << "minor" << i + 1 << " = " << fmt_double(leading[i]) << "\n";
        os << "auxiliary_minor = " << fmt_double(auxiliary) << "\n";
        os << "verdict = " << verdict_name(verdict) << "\n";
        if (verdict == FRH_HOPF_CANDIDATE) {
            double re = 0, im = 0;
            frh_report_critical_pair(report, &re, &im);
            os << "critical_radius = " << fmt_double(r0) << "\n";
            os << "critical_pair = " << fmt_double(re) << " +- " << fmt_double(im) << "i\n";
        }
        os << "roots (re, im, modulus, argument):\n";
        for (int i = 0; i < frh_report_root_count(report); ++i) {
            double re, im, mod, arg;
            frh_report_root(report, i, &re, &im, &mod, &arg);
            os << "  " << fmt_double(re) << ", " << fmt_double(im) << ", " << fmt_double(mod)
               << ", " << fmt_double(arg) << "\n";
        }
        os << "sector_counts = " << s_stable << " stable, " << s_crit << " critical, " << s_unst
           << " unstable, " << s_zero << " zero\n";
    }

    int exit_code = verdict == FRH_STABLE ? 0 : verdict == FRH_HOPF_CANDIDATE ? 2 : 3;
    frh_report_free(report);
    return exit_code;
}

int cmd_scan(const frh_system* sys, const std::string& axes_text, const std::string& window_text,
             const std::string& res_text, const std::string& mu_text, const std::string& out_path,
             const std::string& command_name, const Config& canonical) {
    auto axes = split_list(axes_text);
    if (axes.size() != 2) die("--axes expects two parameter names");
    auto window = parse_doubles(window_text, "window");
    if (window.size() != 4) die("--window expects x0,x1,y0,y1");
    auto res = parse_doubles(res_text, "res");
    if (res.size() != 2) die("--res expects m1,m2");

    const int k = frh_system_param_count(sys);
    std::vector<double> fixed(k, 0.0);
    if (!mu_text.empty()) {
        auto mu = parse_doubles(mu_text, "mu");
        if (static_cast<int>(mu.size()) != k) die("fixed mu must list every parameter");
        fixed = mu;
    }

    int threads = 0;
    if (const char* env = std::getenv("HOPF_FRH_THREADS")) {
        try {
            threads = std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            die("HOPF_FRH_THREADS is not an integer");
        }
    }

    frh_scan_result* scan = nullptr;
    check(frh_scan(sys, axes[0].c_str(), axes[1].c_str(), fixed.data(), window[0], window[1],
                   window[2], window[3], static_cast<int>(res[0]), static_cast<int>(res[1]),
                   threads, &scan),
          "scan");

    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    os << axes[0] << "," << axes[1] << ",r0,transversal\n";
    const int a1 = [&] {
        for (int i = 0; i < k; ++i)
            if (axes[0] == frh_system_param_name(sys, i)) return i;
        return 0;
    }();
    const int a2 = [&] {
        for (int i = 0; i < k; ++i)
            if (axes[1] == frh_system_param_name(sys, i)) return i;
        return 1;
    }();
    std::vector<double> mu(k);
    for (int i = 0; i < frh_scan_size(scan); ++i) {
        double r0 = 0.0;
        frh_transversality tv = FRH_INCONCLUSIVE;
        frh_scan_point(scan, i, mu.data(), &r0, &tv);
        os << fmt_double(mu[a1]) << "," << fmt_double(mu[a2]) << "," << fmt_double(r0) << ","
           << transversality_flag(tv) << "\n";
    }
    frh_scan_free(scan);

    if (!out_path.empty()) write_sidecar(out_path, command_name, canonical);
    return 0;
}

int cmd_degenerate(const frh_system* sys, const std::string& guess_text,
                   const std::string& out_path, const std::string& format) {
    auto guess = parse_doubles(guess_text, "guess");
    if (guess.size() != 2) die("--guess expects two values");
    std::vector<double> mu0(2);
    frh_definiteness hess = FRH_HESS_NOT_COMPUTED;
    double top_minor = 0.0;
    check(frh_find_degenerate(sys, guess.data(), mu0.data(), &hess, &top_minor), "degenerate");

    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    if (format == "json") {
        json j{{"mu0", mu0},
               {"hessian", definiteness_name(hess)},
               {"top_minor", top_minor}};
        os << j.dump(2) << "\n";
    } else {
        os << "mu0 = " << fmt_double(mu0[0]) << ", " << fmt_double(mu0[1]) << "\n";
        os << "hessian = " << definiteness_name(hess) << "\n";
        os << "top_minor = " << fmt_double(top_minor) << "\n";
    }
    return 0;
}

int cmd_simulate(const frh_system* sys, const std::string& mu_text, const std::string& x0_text,
                 const std::string& v0_text, double horizon, double step, double tail,
                 const std::string& out_path) {
    auto mu = require_mu(sys, mu_text);
    auto x0 = parse_doubles(x0_text, "x0");
    if (x0.size() != 3) die("--x0 expects three values");
    std::vector<double> v0;
    if (!v0_text.empty()) {
        v0 = parse_doubles(v0_text, "v0");
        if (v0.size() != 3) die("--v0 expects three values");
    }

    frh_trajectory* tr = nullptr;
    check(frh_simulate(sys, mu.data(), x0.data(), v0.empty() ? nullptr : v0.data(), horizon, step,
                       &tr),
          "simulate");

    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    os << "t,x1,x2,x3\n";
    std::vector<double> x(3);
    for (int i = 0; i < frh_trajectory_size(tr); ++i) {
        double t = 0.0;
        frh_trajectory_sample(tr, i, &t, x.data());
        os << fmt_double(t) << "," << fmt_double(x[0]) << "," << fmt_double(x[1]) << ","
           << fmt_double(x[2]) << "\n";
    }
    if (frh_trajectory_blowup_index(tr) >= 0)
        std::cerr << "frhopf: trajectory truncated at step " << frh_trajectory_blowup_index(tr)
                  << " (non-finite state)\n";

    double metric = 0.0;
    frh_status st = frh_oscillation_metric(tr, tail, &metric);
    std::ostream& report = out_path.empty() ? std::cerr : std::cout;
    if (st == FRH_OK)
        report << "oscillation_metric = " << fmt_double(metric) << "\n";
    else
        report << "oscillation_metric unavailable: " << frh_status_name(st) << "\n";
    frh_trajectory_free(tr);
    return 0;
}

int cmd_selftest() {
    int failed = 0;
    frh_status st = frh_selftest(
        [](const char* line, void*) { std::cout << line << "\n"; }, nullptr, &failed);
    if (st != FRH_OK) die(std::string("selftest: ") + frh_status_name(st));
    std::cout << (failed == 0 ? "all suites passed" : std::to_string(failed) + " suite(s) failed")
              << "\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hopf bifurcation analysis of fractional-order systems (1 < alpha < 2)"};
    app.require_subcommand(1);

    std::string config_path, out_path, format, mu_text, axes_text, window_text, res_text,
        guess_text, x0_text, v0_text, tail_text, horizon_text, step_text;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-c,--config", config_path, "config file (INI or emitted JSON sidecar)");
        cmd->add_option("-o,--output", out_path, "output path (default: stdout)");
        cmd->add_option("--format", format, "output format: csv or json");
    };

    CLI::App* classify = app.add_subcommand("classify", "evaluate the criterion at one point");
    add_common(classify);
    classify->add_option("--mu", mu_text, "parameter values, comma separated");

    CLI::App* scan = app.add_subcommand("scan", "map the bifurcation curve over a window");
    add_common(scan);
    scan->add_option("--mu", mu_text, "fixed values for all parameters");
    scan->add_option("--axes", axes_text, "two parameter names");
    scan->add_option("--window", window_text, "x0,x1,y0,y1");
    scan->add_option("--res", res_text, "grid resolution m1,m2");

    CLI::App* degenerate = app.add_subcommand("degenerate", "locate a stationary surface point");
    add_common(degenerate);
    degenerate->add_option("--guess", guess_text, "starting point v1,v2");

    CLI::App* simulate = app.add_subcommand("simulate", "integrate the demo system in time");
    simulate->set_help_flag("--help", "print help"); // frees -h for the step option
    add_common(simulate);
    simulate->add_option("--mu", mu_text, "parameter values");
    simulate->add_option("--x0", x0_text, "initial state (three values)");
    simulate->add_option("--v0", v0_text, "initial derivative (three values, default zero)");
    simulate->add_option("--T", horizon_text, "horizon");
    simulate->add_option("--h", step_text, "step size");
    simulate->add_option("--tail", tail_text, "oscillation metric tail fraction");

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in property suites");
    (void)selftest;

    CLI11_PARSE(app, argc, argv);

    if (app.got_subcommand("selftest")) return cmd_selftest();

    Config cfg;
    if (!config_path.empty()) cfg = load_config(config_path);

    // command-line flags override [command] entries from the config
    auto effective = [&](const std::string& key, const std::string& flag_value) {
        return !flag_value.empty() ? flag_value : cfg.get("command", key);
    };
    mu_text = effective("mu", mu_text);
    axes_text = effective("axes", axes_text);
    window_text = effective("window", window_text);
    res_text = effective("res", res_text);
    guess_text = effective("guess", guess_text);
    x0_text = effective("x0", x0_text);
    v0_text = effective("v0", v0_text);
    tail_text = effective("tail", tail_text);
    horizon_text = effective("T", horizon_text);
    step_text = effective("h", step_text);
    if (out_path.empty()) out_path = cfg.get("output", "path");
    if (format.empty()) format = cfg.get("output", "format", "csv");
    if (format != "csv" && format != "json") die("format must be csv or json");

    SystemHandle handle;
    Config canonical;
    build_system(cfg, handle, canonical);
    canonical.set("output", "format", format);

    try {
        if (app.got_subcommand("classify")) {
            if (mu_text.empty() && frh_system_param_count(handle.sys) > 0)
                die("classify requires --mu");
            canonical.set("command", "mu", mu_text);
            return cmd_classify(handle.sys, require_mu(handle.sys, mu_text), out_path, format);
        }
        if (app.got_subcommand("scan")) {
            if (axes_text.empty() || window_text.empty() || res_text.empty())
                die("scan requires --axes, --window and --res");
            canonical.set("command", "axes", axes_text);
            canonical.set("command", "window", window_text);
            canonical.set("command", "res", res_text);
            if (!mu_text.empty()) canonical.set("command", "mu", mu_text);
            return cmd_scan(handle.sys, axes_text, window_text, res_text, mu_text, out_path, "scan",
                            canonical);
        }
        if (app.got_subcommand("degenerate")) {
            if (guess_text.empty()) die("degenerate requires --guess");
            canonical.set("command", "guess", guess_text);
            return cmd_degenerate(handle.sys, guess_text, out_path, format);
        }
        if (app.got_subcommand("simulate")) {
            if (mu_text.empty() || x0_text.empty() || horizon_text.empty() || step_text.empty())
                die("simulate requires --mu, --x0, --T and --h");
            const double horizon = parse_doubles(horizon_text, "T").at(0);
            const double step = parse_doubles(step_text, "h").at(0);
            const double tail = tail_text.empty() ? 0.25 : parse_doubles(tail_text, "tail").at(0);
            canonical.set("command", "mu", mu_text);
            canonical.set("command", "x0", x0_text);
            if (!v0_text.empty()) canonical.set("command", "v0", v0_text);
            canonical.set("command", "T", horizon_text);
            canonical.set("command", "h", step_text);
            canonical.set("command", "tail", fmt_double(tail));
            return cmd_simulate(handle.sys, mu_text, x0_text, v0_text, horizon, step, tail,
                                out_path);
        }
    } catch (const std::exception& e) {
        die(e.what());
    }
    die("no subcommand handled");
}
