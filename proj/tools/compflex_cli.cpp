#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "compflex/csv.hpp"
#include "compflex/engine.hpp"

namespace {

using namespace compflex;

struct Options {
    double alpha = 4.0;
    double cell_radius = 100.0;
    double noise_dbm = -174.0;
    int tiers = 10;
    double epsilon = 0.1;
    double rate_ul = 0.03;
    double rate_dl = 0.06;
    int rho_steps = 26;
    int trials = 10000;
    uint64_t seed = 1;
    std::string scheme = "both";
    std::string interference = "mirrored";
    std::string power = "adjusted";
    std::string out;
    std::string config_path;

    // stationary subcommand
    double rho_step = 0.5;
    std::string uv_grid = "10:90:9";
};

// Flat key=value config mirroring the scenario fields; '#' starts a comment.
// Command-line flags take precedence over file values.
void apply_config_file(const CLI::App& cmd, Options& opt) {
    if (opt.config_path.empty())
        return;
    std::ifstream f(opt.config_path);
    if (!f)
        throw std::invalid_argument("cannot read config file " + opt.config_path);

    auto unset = [&cmd](const std::string& flag) {
        const CLI::Option* o = cmd.get_option_no_throw(flag);
        return o != nullptr && o->count() == 0;
    };
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        const size_t eq = line.find('=');
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        auto trim = [](std::string s) {
            const size_t b = s.find_first_not_of(" \t");
            const size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const double num = std::strtod(value.c_str(), nullptr);
        if (key == "alpha" && unset("--alpha")) opt.alpha = num;
        else if (key == "cell_radius" && unset("--cell-radius")) opt.cell_radius = num;
        else if (key == "noise_dbm" && unset("--noise-dbm")) opt.noise_dbm = num;
        else if (key == "tiers" && unset("--tiers")) opt.tiers = std::stoi(value);
        else if (key == "epsilon" && unset("--epsilon")) opt.epsilon = num;
        else if (key == "rate_ul" && unset("--rate-ul")) opt.rate_ul = num;
        else if (key == "rate_dl" && unset("--rate-dl")) opt.rate_dl = num;
        else if (key == "rho_steps" && unset("--rho-steps")) opt.rho_steps = std::stoi(value);
        else if (key == "trials" && unset("--trials")) opt.trials = std::stoi(value);
        else if (key == "seed" && unset("--seed")) opt.seed = std::stoull(value);
        else if (key == "scheme" && unset("--scheme")) opt.scheme = value;
        else if (key == "interference" && unset("--interference")) opt.interference = value;
        else if (key == "power" && unset("--power")) opt.power = value;
        else if (key != "alpha" && key != "cell_radius" && key != "noise_dbm" &&
                 key != "tiers" && key != "epsilon" && key != "rate_ul" &&
                 key != "rate_dl" && key != "rho_steps" && key != "trials" &&
                 key != "seed" && key != "scheme" && key != "interference" &&
                 key != "power")
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
    }
}

void add_scenario_flags(CLI::App& cmd, Options& opt) {
    cmd.add_option("--alpha", opt.alpha, "Pathloss exponent");
    cmd.add_option("--cell-radius", opt.cell_radius, "Cell radius R in meters");
    cmd.add_option("--noise-dbm", opt.noise_dbm, "Noise power in dBm");
    cmd.add_option("--tiers", opt.tiers, "Interfering cell tiers per side");
    cmd.add_option("--epsilon", opt.epsilon, "Cell-edge outage probability");
    cmd.add_option("--rate-ul", opt.rate_ul, "Required UL rate, bits/s");
    cmd.add_option("--rate-dl", opt.rate_dl, "Required DL rate, bits/s");
    cmd.add_option("--power", opt.power, "Power mode: adjusted|constant")
        ->check(CLI::IsMember({"adjusted", "constant"}));
    cmd.add_option("--config", opt.config_path,
                   "Key/value config file; flags override it");
}

ScenarioConfig build_config(const Options& opt) {
    ScenarioConfig cfg;
    cfg.layout.radius = opt.cell_radius;
    cfg.layout.tiers = opt.tiers;
    cfg.prop.alpha = opt.alpha;
    cfg.prop.noise_dbm = opt.noise_dbm;
    cfg.power.mode = power_mode_from_name(opt.power);
    cfg.power.rate_ul_req = opt.rate_ul;
    cfg.power.rate_dl_req = opt.rate_dl;
    cfg.power.epsilon = opt.epsilon;
    cfg.model = model_from_name(opt.interference);
    if (opt.scheme == "compflex")
        cfg.scheme = SchemeSelect::CoMPflex;
    else if (opt.scheme == "baseline")
        cfg.scheme = SchemeSelect::Baseline;
    else
        cfg.scheme = SchemeSelect::Both;
    cfg.rho_grid = rho_grid_linspace(opt.cell_radius, opt.rho_steps);
    cfg.trials = opt.trials;
    cfg.seed = opt.seed;
    return cfg;
}

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return std::cout ? 0 : 1;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return 1;
    }
    f << text;
    if (!f) {
        std::cerr << "error: write to " << path << " failed\n";
        return 1;
    }
    return 0;
}

int cmd_sweep(const Options& opt) {
    const ScenarioConfig cfg = build_config(opt);
    const std::vector<SweepRecord> records = run_sweep(cfg);
    return write_output(to_csv(records), opt.out);
}

std::vector<std::pair<double, double>> parse_uv_grid(const std::string& spec) {
    double lo = 0.0, hi = 0.0;
    int count = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 ||
        count < 1 || hi < lo)
        throw CLI::ValidationError("--uv-grid", "expected min:max:count");
    std::vector<double> pts;
    for (int i = 0; i < count; ++i)
        pts.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    std::vector<std::pair<double, double>> grid;
    for (double u : pts)
        for (double v : pts)
            grid.emplace_back(u, v);
    return grid;
}

int cmd_stationary(const Options& opt) {
    const ScenarioConfig cfg = build_config(opt);
    const auto uv = parse_uv_grid(opt.uv_grid);
    const StationaryReport report = stationary_check(cfg, uv, opt.rho_step);
    for (const StationaryCellReport& c : report.cells)
        std::printf("u=%-6g v=%-6g min_slope_u=%+.3e min_slope_d=%+.3e "
                    "min_slope_prod=%+.3e  %s\n",
                    c.u, c.v, c.min_slope_u, c.min_slope_d, c.min_slope_prod,
                    c.pass ? "PASS" : "FAIL");
    std::printf("stationary check: %s (%zu cells, tolerance %g)\n",
                report.all_pass ? "PASS" : "FAIL", report.cells.size(),
                report.tolerance);
    return report.all_pass ? 0 : 3;
}

double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

int cmd_power(const Options& opt) {
    const ScenarioConfig cfg = build_config(opt);
    std::printf("%10s %14s %14s %14s %10s %10s %10s\n", "rho_m", "p_bs_w",
                "p_ms_w", "p_sum_w", "p_bs_dbm", "p_ms_dbm", "p_sum_dbm");
    for (double rho : cfg.rho_grid) {
        CellLayout lay = cfg.layout;
        lay.rho = rho;
        const TxPowers p = powers_for(lay, cfg.power, cfg.prop);
        const double sum = p.p_bs + p.p_ms;
        std::printf("%10g %14.6e %14.6e %14.6e %10.3f %10.3f %10.3f\n", rho,
                    p.p_bs, p.p_ms, sum, watts_to_dbm(p.p_bs),
                    watts_to_dbm(p.p_ms), watts_to_dbm(sum));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CoMPflex 1-D Wyner-model simulator"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* sweep = app.add_subcommand("sweep", "Monte-Carlo sweep over rho; CSV output");
    add_scenario_flags(*sweep, opt);
    sweep->add_option("--rho-steps", opt.rho_steps, "Grid points over [0, R/2]")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--trials", opt.trials, "Monte-Carlo trials per point")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--seed", opt.seed, "Master RNG seed");
    sweep->add_option("--scheme", opt.scheme, "compflex|baseline|both")
        ->check(CLI::IsMember({"compflex", "baseline", "both"}));
    sweep->add_option("--interference", opt.interference, "mirrored|worst-case")
        ->check(CLI::IsMember({"mirrored", "worst-case"}));
    sweep->add_option("--out", opt.out, "Output CSV path (default: stdout)");

    CLI::App* stationary = app.add_subcommand(
        "stationary", "Verify SINR monotonicity in rho under stationary conditions");
    add_scenario_flags(*stationary, opt);
    stationary->add_option("--rho-step", opt.rho_step, "Finite-difference step, meters")
        ->check(CLI::PositiveNumber);
    stationary->add_option("--uv-grid", opt.uv_grid, "MS position grid, min:max:count");

    CLI::App* power = app.add_subcommand("power", "Print transmit powers over the rho grid");
    add_scenario_flags(*power, opt);
    power->add_option("--rho-steps", opt.rho_steps, "Grid points over [0, R/2]")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sweep->parsed()) {
            apply_config_file(*sweep, opt);
            return cmd_sweep(opt);
        }
        if (stationary->parsed()) {
            apply_config_file(*stationary, opt);
            return cmd_stationary(opt);
        }
        apply_config_file(*power, opt);
        return cmd_power(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
