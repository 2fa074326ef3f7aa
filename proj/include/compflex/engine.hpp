#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "compflex/geometry.hpp"
#include "compflex/interference.hpp"
#include "compflex/metrics.hpp"
#include "compflex/power_control.hpp"
#include "compflex/propagation.hpp"

namespace compflex {

enum class SchemeSelect { CoMPflex, Baseline, Both };

struct ScenarioConfig {
    CellLayout layout;      // layout.rho is ignored; rho comes from rho_grid
    PropagationParams prop;
    PowerPolicy power;
    SchemeSelect scheme = SchemeSelect::Both;
    InterferenceVariant model = InterferenceVariant::Mirrored;
    std::vector<double> rho_grid = {0.0};
    int trials = 10000;
    uint64_t seed = 1;
};

// rho grid over [0, R/2] with both endpoints; steps == 1 yields {0}.
std::vector<double> rho_grid_linspace(double radius, int steps);

struct SweepRecord {
    double rho = 0.0;
    Scheme scheme = Scheme::CoMPflex;
    InterferenceVariant model = InterferenceVariant::Mirrored;
    PowerMode power_mode = PowerMode::Adjusted;
    double alpha = 4.0;
    double mean_sum_rate = 0.0; // bits/s
    double mean_ee = 0.0;       // bits/joule
    double eta = 0.0;           // NaN when the grid lacks rho = 0
    double p_bs = 0.0, p_ms = 0.0, p_sum = 0.0; // watts
    int trials = 0;
    uint64_t seed = 0;
};

struct TrialOutcome {
    TrialResult compflex;
    TrialResult baseline;
};

// One Monte-Carlo trial: samples positions and fading from the trial's
// substream, then evaluates both schemes on the shared placement.
TrialOutcome run_trial(const ScenarioConfig& cfg, double rho, int trial_index);

// Ordinary FD: one full-duplex BS at the cell center. Kept as a separate
// entry point so the rho = 0 identity can be checked against it.
TrialResult run_trial_fd_collocated(const ScenarioConfig& cfg, int trial_index);

// OpenMP over trials; per-trial results are merged in index order, so the
// output is bit-identical for any worker count.
std::vector<SweepRecord> run_sweep(const ScenarioConfig& cfg);

// Serial reference implementation, kept for testing and benchmarking.
std::vector<SweepRecord> run_sweep_reference(const ScenarioConfig& cfg);

// Stationary conditions: unit gains, first-tier interference with the
// interfering MSs at their average offset R/2, power adjustment active.
SinrPair stationary_sinr(const ScenarioConfig& cfg, double u, double v,
                         double rho);

struct StationaryCellReport {
    double u = 0.0, v = 0.0;
    // Minimum central-difference slope, normalized by the local SINR value.
    double min_slope_u = 0.0;    // gamma_U over [0, u]
    double min_slope_d = 0.0;    // gamma_D over [0, v]
    double min_slope_prod = 0.0; // gamma_U * gamma_D over [0, min(u, v)]
    bool pass = false;
};

struct StationaryReport {
    std::vector<StationaryCellReport> cells;
    double tolerance = 1e-9;
    bool all_pass = false;
};

StationaryReport stationary_check(const ScenarioConfig& cfg,
                                  const std::vector<std::pair<double, double>>& uv_grid,
                                  double rho_step, double tolerance = 1e-9);

} // namespace compflex
