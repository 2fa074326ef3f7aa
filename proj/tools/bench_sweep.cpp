// Compares the serial reference sweep against the OpenMP sweep and checks
// that both produce identical records.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "compflex/csv.hpp"
#include "compflex/engine.hpp"

using namespace compflex;

namespace {

double seconds_for(std::vector<SweepRecord> (*fn)(const ScenarioConfig&),
                   const ScenarioConfig& cfg, std::vector<SweepRecord>& out) {
    const auto t0 = std::chrono::steady_clock::now();
    out = fn(cfg);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    ScenarioConfig cfg;
    cfg.trials = argc > 1 ? std::atoi(argv[1]) : 20000;
    cfg.rho_grid = rho_grid_linspace(cfg.layout.radius, 11);
    cfg.seed = 42;

    std::vector<SweepRecord> serial, parallel;
    const double t_serial = seconds_for(run_sweep_reference, cfg, serial);
    const double t_parallel = seconds_for(run_sweep, cfg, parallel);

    const bool identical = to_csv(serial) == to_csv(parallel);
    std::printf("trials per rho point: %d, rho points: %zu\n", cfg.trials,
                cfg.rho_grid.size());
    std::printf("serial reference: %8.3f s\n", t_serial);
    std::printf("openmp:           %8.3f s  (speedup %.2fx)\n", t_parallel,
                t_serial / t_parallel);
    std::printf("records identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
