#include "compflex/interference.hpp"

namespace compflex {

namespace {

Placement stationary_placement(const Placement& placement, double radius) {
    Placement p = placement;
    p.u_left.assign(1, radius / 2.0);
    p.u_right.assign(1, radius / 2.0);
    return p;
}

} // namespace

InterferenceBreakdown aggregate_interference(InterferenceVariant model,
                                             const CellLayout& layout,
                                             const Placement& placement,
                                             const TxPowers& powers,
                                             const LinkRealization& gains,
                                             const PropagationParams& params) {
    CellLayout lay = layout;
    Placement place = placement;
    const LinkRealization* g = &gains;
    LinkRealization unit_gains;
    if (model == InterferenceVariant::StationaryFirstTier) {
        lay.tiers = 1;
        place = stationary_placement(placement, layout.radius);
        unit_gains = LinkRealization::unit(1);
        g = &unit_gains;
    }

    const double a = params.alpha;
    InterferenceBreakdown out;
    for (int n = 1; n <= lay.tiers; ++n) {
        const TierDistances d = model == InterferenceVariant::WorstCase
                                    ? worstcase_tier_distances(lay, place, n)
                                    : mirrored_tier_distances(lay, place, n);
        const TierGains& t = g->tiers.at(static_cast<size_t>(n) - 1);
        out.i_bb += powers.p_bs * (t.bb_l * pathloss(d.bb_l, a) +
                                   t.bb_r * pathloss(d.bb_r, a));
        out.i_mb += powers.p_ms * (t.mb_l * pathloss(d.mb_l, a) +
                                   t.mb_r * pathloss(d.mb_r, a));
        out.i_bm += powers.p_bs * (t.bm_l * pathloss(d.bm_l, a) +
                                   t.bm_r * pathloss(d.bm_r, a));
        out.i_mm_inter += powers.p_ms * (t.mm_l * pathloss(d.mm_l, a) +
                                         t.mm_r * pathloss(d.mm_r, a));
    }
    return out;
}

BaselineInterference baseline_interference(Phase phase, InterferenceVariant model,
                                           const CellLayout& layout,
                                           const Placement& placement,
                                           const TxPowers& powers,
                                           const BaselinePhaseGains& gains,
                                           const PropagationParams& params) {
    if (model == InterferenceVariant::StationaryFirstTier)
        throw std::invalid_argument("stationary model is CoMPflex-only");

    const double a = params.alpha;
    const double R = layout.radius;
    const double rho = layout.rho;
    const BaselineCrossDistances cross = baseline_cross_distances(layout, placement);

    double rx_left, rx_right;   // receiver coordinates
    double p_tx;                // interfering transmitter power
    double left_w, right_w;

    if (phase == Phase::Uplink) {
        rx_left = -rho;
        rx_right = rho;
        p_tx = powers.p_ms;
        left_w = powers.p_ms * gains.g_cross_left * pathloss(cross.ul_left, a);
        right_w = powers.p_ms * gains.g_cross_right * pathloss(cross.ul_right, a);
    } else {
        rx_left = -placement.v;
        rx_right = placement.u;
        p_tx = powers.p_bs;
        left_w = powers.p_bs * gains.g_cross_left * pathloss(cross.dl_left, a);
        right_w = powers.p_bs * gains.g_cross_right * pathloss(cross.dl_right, a);
    }

    for (int n = 1; n <= layout.tiers; ++n) {
        const double idx = static_cast<double>(n);
        for (int side = 0; side < 2; ++side) {
            const double center = (side == 0 ? -1.0 : 1.0) * 2.0 * idx * R;
            // Two interfering transmitters per cell and phase.
            double tx[2];
            if (phase == Phase::Uplink) {
                if (model == InterferenceVariant::Mirrored) {
                    const double off = side == 0
                        ? placement.u_left.at(static_cast<size_t>(n) - 1)
                        : placement.u_right.at(static_cast<size_t>(n) - 1);
                    tx[0] = center - off;
                    tx[1] = center + off;
                } else {
                    // Worst case: left-cell MSs at the near edge, right-cell
                    // MSs at the cell center.
                    const double pos = side == 0 ? center + R : center;
                    tx[0] = tx[1] = pos;
                }
            } else {
                if (model == InterferenceVariant::Mirrored) {
                    tx[0] = center - rho;
                    tx[1] = center + rho;
                } else {
                    // Worst case: left-cell BSs at the center, right-cell BSs
                    // at rho = R/2 toward the center cell.
                    const double pos = side == 0 ? center : center - R / 2.0;
                    tx[0] = tx[1] = pos;
                }
            }
            const std::array<double, 8>& g =
                gains.tiers.at(static_cast<size_t>(n) - 1);
            for (int k = 0; k < 2; ++k) {
                left_w += p_tx * g[static_cast<size_t>(side * 4 + k * 2)] *
                          pathloss(tx[k] - rx_left, a);
                right_w += p_tx * g[static_cast<size_t>(side * 4 + k * 2 + 1)] *
                           pathloss(tx[k] - rx_right, a);
            }
        }
    }
    return {left_w, right_w};
}

} // namespace compflex
