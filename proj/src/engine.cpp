#include "compflex/engine.hpp"

#include <algorithm>
#include <cmath>

#include "compflex/rng.hpp"
#include "engine_common.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace compflex {

namespace {

BaselinePhaseGains draw_baseline_gains(SplitMix64& stream, int tiers) {
    BaselinePhaseGains g;
    g.g_sig_left = draw_fading(stream);
    g.g_sig_right = draw_fading(stream);
    g.g_cross_left = draw_fading(stream);
    g.g_cross_right = draw_fading(stream);
    g.tiers.resize(static_cast<size_t>(tiers));
    for (auto& t : g.tiers)
        for (double& x : t)
            x = draw_fading(stream);
    return g;
}

struct TrialDraws {
    Placement placement;
    LinkRealization gains;
    BaselinePhaseGains ul_gains;
    BaselinePhaseGains dl_gains;
};

// Fixed draw order: positions, CoMPflex gains, baseline UL then DL gains.
// Everything is drawn regardless of scheme and model so that a trial's
// substream consumption never depends on the selection.
TrialDraws draw_trial(const ScenarioConfig& cfg, int trial_index) {
    SplitMix64 stream = trial_stream(cfg.seed, static_cast<uint64_t>(trial_index));
    TrialDraws d;
    const double R = cfg.layout.radius;
    d.placement.u = stream.uniform01() * R;
    d.placement.v = stream.uniform01() * R;
    d.placement.u_left.resize(static_cast<size_t>(cfg.layout.tiers));
    d.placement.u_right.resize(static_cast<size_t>(cfg.layout.tiers));
    for (int n = 0; n < cfg.layout.tiers; ++n) {
        d.placement.u_left[static_cast<size_t>(n)] = stream.uniform01() * R;
        d.placement.u_right[static_cast<size_t>(n)] = stream.uniform01() * R;
    }
    d.gains = draw_link_realization(stream, cfg.layout.tiers);
    d.ul_gains = draw_baseline_gains(stream, cfg.layout.tiers);
    d.dl_gains = draw_baseline_gains(stream, cfg.layout.tiers);
    return d;
}

TrialResult compflex_trial(const ScenarioConfig& cfg, const CellLayout& lay,
                           const TrialDraws& d, const TxPowers& powers,
                           double sigma2) {
    const InterferenceBreakdown ib = aggregate_interference(
        cfg.model, lay, d.placement, powers, d.gains, cfg.prop);
    SinrPair sinr;
    sinr.gamma_u = sinr_ul(powers, d.gains, lay, d.placement, ib.at_bs(),
                           sigma2, cfg.prop.alpha);
    sinr.gamma_d = sinr_dl(powers, d.gains, lay, d.placement, ib.at_ms(),
                           sigma2, cfg.prop.alpha);
    TrialResult r;
    r.sinr = sinr;
    r.r_sum = sum_rate(sinr);
    r.ee = energy_efficiency(r.r_sum, powers);
    r.scheme = Scheme::CoMPflex;
    r.rho = lay.rho;
    return r;
}

TrialResult baseline_trial(const ScenarioConfig& cfg, const CellLayout& lay,
                           const TrialDraws& d, const TxPowers& powers,
                           double sigma2) {
    const double a = cfg.prop.alpha;
    const IntraDistances dist = intra_distances(lay, d.placement);
    // Both phases reuse the trial's positions; fading is independent.
    const BaselineInterference i_ul = baseline_interference(
        Phase::Uplink, cfg.model, lay, d.placement, powers, d.ul_gains, cfg.prop);
    const double g_ul_l = powers.p_ms * d.ul_gains.g_sig_left *
                          pathloss(dist.d_bm, a) / (sigma2 + i_ul.at_left_w);
    const double g_ul_r = powers.p_ms * d.ul_gains.g_sig_right *
                          pathloss(dist.d_mb, a) / (sigma2 + i_ul.at_right_w);
    const BaselineInterference i_dl = baseline_interference(
        Phase::Downlink, cfg.model, lay, d.placement, powers, d.dl_gains, cfg.prop);
    const double g_dl_l = powers.p_bs * d.dl_gains.g_sig_left *
                          pathloss(dist.d_bm, a) / (sigma2 + i_dl.at_left_w);
    const double g_dl_r = powers.p_bs * d.dl_gains.g_sig_right *
                          pathloss(dist.d_mb, a) / (sigma2 + i_dl.at_right_w);

    TrialResult r;
    r.sinr = {g_ul_r, g_dl_l};
    r.r_sum = baseline_sum_rate(std::log2(1.0 + g_ul_l), std::log2(1.0 + g_ul_r),
                                std::log2(1.0 + g_dl_l), std::log2(1.0 + g_dl_r));
    r.ee = energy_efficiency(r.r_sum, powers);
    r.scheme = Scheme::Baseline;
    r.rho = lay.rho;
    return r;
}

} // namespace

std::vector<double> rho_grid_linspace(double radius, int steps) {
    if (steps < 1)
        throw std::invalid_argument("rho steps must be >= 1");
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(steps));
    if (steps == 1) {
        grid.push_back(0.0);
        return grid;
    }
    const double half = radius / 2.0;
    for (int i = 0; i < steps; ++i)
        grid.push_back(half * static_cast<double>(i) /
                       static_cast<double>(steps - 1));
    return grid;
}

TrialOutcome run_trial(const ScenarioConfig& cfg, double rho, int trial_index) {
    CellLayout lay = cfg.layout;
    lay.rho = rho;
    lay.validate();
    const TrialDraws d = draw_trial(cfg, trial_index);
    const TxPowers powers = powers_for(lay, cfg.power, cfg.prop);
    const double sigma2 = noise_watts(cfg.prop.noise_dbm);
    return {compflex_trial(cfg, lay, d, powers, sigma2),
            baseline_trial(cfg, lay, d, powers, sigma2)};
}

TrialResult run_trial_fd_collocated(const ScenarioConfig& cfg, int trial_index) {
    // One FD-BS at the cell center serving both directions at once.
    CellLayout lay = cfg.layout;
    lay.rho = 0.0;
    const TrialDraws d = draw_trial(cfg, trial_index);
    const TxPowers powers = powers_for(lay, cfg.power, cfg.prop);
    const double sigma2 = noise_watts(cfg.prop.noise_dbm);
    return compflex_trial(cfg, lay, d, powers, sigma2);
}

std::vector<SweepRecord> run_sweep(const ScenarioConfig& cfg) {
    detail::validate_sweep_config(cfg);
    const bool want_cf = cfg.scheme != SchemeSelect::Baseline;
    const bool want_bl = cfg.scheme != SchemeSelect::CoMPflex;

    std::vector<SweepRecord> records;
    std::vector<double> rs_cf(static_cast<size_t>(cfg.trials));
    std::vector<double> rs_bl(static_cast<size_t>(cfg.trials));
    for (double rho : cfg.rho_grid) {
        CellLayout lay = cfg.layout;
        lay.rho = rho;
        const TxPowers powers = powers_for(lay, cfg.power, cfg.prop);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int i = 0; i < cfg.trials; ++i) {
            const TrialOutcome o = run_trial(cfg, rho, i);
            rs_cf[static_cast<size_t>(i)] = o.compflex.r_sum;
            rs_bl[static_cast<size_t>(i)] = o.baseline.r_sum;
        }

        // Merge in fixed index order; independent of the worker count.
        double sum_cf = 0.0, sum_bl = 0.0;
        for (int i = 0; i < cfg.trials; ++i) {
            sum_cf += rs_cf[static_cast<size_t>(i)];
            sum_bl += rs_bl[static_cast<size_t>(i)];
        }
        if (want_cf)
            records.push_back(detail::make_record(cfg, rho, Scheme::CoMPflex,
                                                  powers, sum_cf / cfg.trials));
        if (want_bl)
            records.push_back(detail::make_record(cfg, rho, Scheme::Baseline,
                                                  powers, sum_bl / cfg.trials));
    }
    detail::fill_eta(records);
    return records;
}

SinrPair stationary_sinr(const ScenarioConfig& cfg, double u, double v,
                         double rho) {
    CellLayout lay = cfg.layout;
    lay.rho = rho;
    lay.tiers = 1;
    lay.validate();
    Placement p;
    p.u = u;
    p.v = v;
    p.u_left.assign(1, lay.radius / 2.0);
    p.u_right.assign(1, lay.radius / 2.0);
    PowerPolicy policy = cfg.power;
    policy.mode = PowerMode::Adjusted;
    const TxPowers powers = powers_for(lay, policy, cfg.prop);
    const double sigma2 = noise_watts(cfg.prop.noise_dbm);
    const LinkRealization gains = LinkRealization::unit(1);
    const InterferenceBreakdown ib = aggregate_interference(
        InterferenceVariant::StationaryFirstTier, lay, p, powers, gains, cfg.prop);
    return {sinr_ul(powers, gains, lay, p, ib.at_bs(), sigma2, cfg.prop.alpha),
            sinr_dl(powers, gains, lay, p, ib.at_ms(), sigma2, cfg.prop.alpha)};
}

namespace {

// Minimum central-difference slope of f over the grid 0, h, ..., K*h,
// normalized by the local function value.
double min_normalized_slope(const std::vector<double>& f, double h) {
    double worst = 0.0;
    for (size_t k = 1; k + 1 < f.size(); ++k) {
        const double slope = (f[k + 1] - f[k - 1]) / (2.0 * h);
        worst = std::min(worst, slope / std::abs(f[k]));
    }
    return worst;
}

} // namespace

StationaryReport stationary_check(const ScenarioConfig& cfg,
                                  const std::vector<std::pair<double, double>>& uv_grid,
                                  double rho_step, double tolerance) {
    if (rho_step <= 0.0)
        throw std::invalid_argument("rho step must be positive");
    const double rho_max_model = cfg.layout.radius / 2.0;

    StationaryReport report;
    report.tolerance = tolerance;
    report.all_pass = true;
    for (const auto& [u, v] : uv_grid) {
        // The claim covers rho in [0, u] (UL) and [0, v] (DL); the layout
        // itself restricts rho to [0, R/2].
        const double lim_u = std::min(u, rho_max_model);
        const double lim_d = std::min(v, rho_max_model);
        const double lim_p = std::min(lim_u, lim_d);
        const int steps = static_cast<int>(std::floor(
            std::max({lim_u, lim_d, lim_p}) / rho_step + 1e-12));

        std::vector<double> gu, gd;
        gu.reserve(static_cast<size_t>(steps) + 1);
        gd.reserve(static_cast<size_t>(steps) + 1);
        for (int k = 0; k <= steps; ++k) {
            const SinrPair s = stationary_sinr(cfg, u, v, k * rho_step);
            gu.push_back(s.gamma_u);
            gd.push_back(s.gamma_d);
        }
        auto truncated = [&](const std::vector<double>& f, double lim) {
            const size_t n = static_cast<size_t>(std::floor(lim / rho_step + 1e-12)) + 1;
            return std::vector<double>(f.begin(), f.begin() + std::min(n, f.size()));
        };
        std::vector<double> prod(gu.size());
        for (size_t k = 0; k < gu.size(); ++k)
            prod[k] = gu[k] * gd[k];

        StationaryCellReport cell;
        cell.u = u;
        cell.v = v;
        cell.min_slope_u = min_normalized_slope(truncated(gu, lim_u), rho_step);
        cell.min_slope_d = min_normalized_slope(truncated(gd, lim_d), rho_step);
        cell.min_slope_prod = min_normalized_slope(truncated(prod, lim_p), rho_step);
        cell.pass = cell.min_slope_u >= -tolerance &&
                    cell.min_slope_d >= -tolerance &&
                    cell.min_slope_prod >= -tolerance;
        report.all_pass = report.all_pass && cell.pass;
        report.cells.push_back(cell);
    }
    return report;
}

} // namespace compflex
