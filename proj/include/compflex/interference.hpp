#pragma once

#include <array>
#include <vector>

#include "compflex/geometry.hpp"
#include "compflex/power_control.hpp"
#include "compflex/propagation.hpp"

namespace compflex {

// Mirrored: interfering cells replicate the center-cell deployment.
// WorstCase: interfering nodes placed as close to the center cell as possible.
// StationaryFirstTier: single tier, unit gains, interfering MS offsets at R/2.
enum class InterferenceVariant { Mirrored, WorstCase, StationaryFirstTier };

struct InterferenceBreakdown {
    double i_bb = 0.0; // BS interference at the UL-BS
    double i_mb = 0.0; // MS interference at the UL-BS
    double i_bm = 0.0; // BS interference at the DL-MS
    double i_mm_inter = 0.0; // inter-cell MS interference at the DL-MS

    double at_bs() const { return i_bb + i_mb; }
    double at_ms() const { return i_bm + i_mm_inter; }
};

// Received interference power, aggregated as an incoherent sum of
// P * g * l(d) over every interfering BS and MS within `tiers` tiers.
InterferenceBreakdown aggregate_interference(InterferenceVariant model,
                                             const CellLayout& layout,
                                             const Placement& placement,
                                             const TxPowers& powers,
                                             const LinkRealization& gains,
                                             const PropagationParams& params);

enum class Phase { Uplink, Downlink };

// Fading gains for one baseline phase. Inter-cell entries are indexed
// [cell side (L,R)][transmitter (0,1)][receiver (left, right)].
struct BaselinePhaseGains {
    double g_sig_left = 1.0, g_sig_right = 1.0;
    double g_cross_left = 1.0, g_cross_right = 1.0;
    std::vector<std::array<double, 8>> tiers;

    static BaselinePhaseGains unit(int tiers) {
        BaselinePhaseGains g;
        g.tiers.assign(static_cast<size_t>(tiers),
                       {1, 1, 1, 1, 1, 1, 1, 1});
        return g;
    }
};

struct BaselineInterference {
    double at_left_w;  // left receiver: BS at -rho (UL) or DL-MS at -v (DL)
    double at_right_w; // right receiver: BS at +rho (UL) or UL-MS at +u (DL)
};

// Baseline scheme: in the UL phase each BS hears the intra-cell cross MS
// plus both MSs of every interfering cell; in the DL phase each MS hears
// the other intra-cell BS plus both BSs of every interfering cell.
BaselineInterference baseline_interference(Phase phase, InterferenceVariant model,
                                           const CellLayout& layout,
                                           const Placement& placement,
                                           const TxPowers& powers,
                                           const BaselinePhaseGains& gains,
                                           const PropagationParams& params);

} // namespace compflex
