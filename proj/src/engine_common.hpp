#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "compflex/engine.hpp"

namespace compflex::detail {

inline void validate_sweep_config(const ScenarioConfig& cfg) {
    if (cfg.rho_grid.empty())
        throw std::invalid_argument("rho grid must be nonempty");
    for (double rho : cfg.rho_grid) {
        if (rho < 0.0 || rho > cfg.layout.radius / 2.0)
            throw std::invalid_argument("rho grid must lie in [0, R/2]");
    }
    if (cfg.trials < 1)
        throw std::invalid_argument("trials must be >= 1");
    CellLayout lay = cfg.layout;
    lay.rho = 0.0;
    lay.validate();
}

inline SweepRecord make_record(const ScenarioConfig& cfg, double rho,
                               Scheme scheme, const TxPowers& powers,
                               double mean_sum_rate) {
    SweepRecord rec;
    rec.rho = rho;
    rec.scheme = scheme;
    rec.model = cfg.model;
    rec.power_mode = cfg.power.mode;
    rec.alpha = cfg.prop.alpha;
    rec.mean_sum_rate = mean_sum_rate;
    rec.p_bs = powers.p_bs;
    rec.p_ms = powers.p_ms;
    rec.p_sum = powers.p_bs + powers.p_ms;
    rec.mean_ee = mean_sum_rate / rec.p_sum;
    rec.eta = std::numeric_limits<double>::quiet_NaN();
    rec.trials = cfg.trials;
    rec.seed = cfg.seed;
    return rec;
}

// Normalized EE against the same sweep's rho = 0 record of the same scheme;
// stays NaN (undefined) when the grid lacks rho = 0.
inline void fill_eta(std::vector<SweepRecord>& records) {
    for (SweepRecord& rec : records) {
        for (const SweepRecord& ref : records) {
            if (ref.scheme == rec.scheme && ref.rho == 0.0) {
                rec.eta = rec.mean_ee / ref.mean_ee;
                break;
            }
        }
    }
}

} // namespace compflex::detail
