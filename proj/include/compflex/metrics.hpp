#pragma once

#include <cmath>
#include <stdexcept>

#include "compflex/geometry.hpp"
#include "compflex/power_control.hpp"
#include "compflex/propagation.hpp"

namespace compflex {

struct SinrPair {
    double gamma_u = 0.0;
    double gamma_d = 0.0;
};

// gamma_U = P_M g_MB l(rho - u) / (sigma^2 + I_B)
inline double sinr_ul(const TxPowers& powers, const LinkRealization& gains,
                      const CellLayout& layout, const Placement& p,
                      double ibar_b_w, double sigma2_w, double alpha) {
    return powers.p_ms * gains.g_mb * pathloss(layout.rho - p.u, alpha) /
           (sigma2_w + ibar_b_w);
}

// gamma_D = P_B g_BM l(rho - v) / (P_M g_MM l(u + v) + I_M + sigma^2);
// the intra-cell MS-to-MS term enters here, on top of the inter-cell I_M.
inline double sinr_dl(const TxPowers& powers, const LinkRealization& gains,
                      const CellLayout& layout, const Placement& p,
                      double ibar_m_w, double sigma2_w, double alpha) {
    return powers.p_bs * gains.g_bm * pathloss(layout.rho - p.v, alpha) /
           (powers.p_ms * gains.g_mm * pathloss(p.u + p.v, alpha) + ibar_m_w +
            sigma2_w);
}

inline double sum_rate(const SinrPair& sinr) {
    return std::log2(1.0 + sinr.gamma_u) + std::log2(1.0 + sinr.gamma_d);
}

// Baseline needs two unidirectional phases, so its sum-rate is the
// two-phase average (R_U + R_D) / 2 over the per-phase link totals.
inline double baseline_sum_rate(double r_ul_left, double r_ul_right,
                                double r_dl_left, double r_dl_right) {
    return 0.5 * ((r_ul_left + r_ul_right) + (r_dl_left + r_dl_right));
}

inline double energy_efficiency(double r_sum, const TxPowers& powers) {
    const double p_sum = powers.p_bs + powers.p_ms;
    if (p_sum <= 0.0)
        throw std::invalid_argument("total transmit power must be positive");
    return r_sum / p_sum;
}

inline double normalized_ee(double ee_at_rho, double ee_at_zero) {
    if (ee_at_zero <= 0.0)
        throw std::invalid_argument("reference EE must be positive");
    return ee_at_rho / ee_at_zero;
}

enum class Scheme { CoMPflex, Baseline };

struct TrialResult {
    SinrPair sinr;
    double r_sum = 0.0; // bits/s
    double ee = 0.0;    // bits/joule
    Scheme scheme = Scheme::CoMPflex;
    double rho = 0.0;
};

} // namespace compflex
