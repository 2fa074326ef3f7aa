#include "compflex/engine.hpp"

#include "engine_common.hpp"

namespace compflex {

// Serial reference sweep. Accumulates trial results in index order, so it
// matches the OpenMP path bit for bit.
std::vector<SweepRecord> run_sweep_reference(const ScenarioConfig& cfg) {
    detail::validate_sweep_config(cfg);
    const bool want_cf = cfg.scheme != SchemeSelect::Baseline;
    const bool want_bl = cfg.scheme != SchemeSelect::CoMPflex;

    std::vector<SweepRecord> records;
    for (double rho : cfg.rho_grid) {
        CellLayout lay = cfg.layout;
        lay.rho = rho;
        const TxPowers powers = powers_for(lay, cfg.power, cfg.prop);

        double sum_cf = 0.0, sum_bl = 0.0;
        for (int i = 0; i < cfg.trials; ++i) {
            const TrialOutcome o = run_trial(cfg, rho, i);
            sum_cf += o.compflex.r_sum;
            sum_bl += o.baseline.r_sum;
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

} // namespace compflex
