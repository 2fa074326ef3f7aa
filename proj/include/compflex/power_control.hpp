#pragma once

#include <cmath>
#include <stdexcept>

#include "compflex/geometry.hpp"
#include "compflex/propagation.hpp"

namespace compflex {

enum class PowerMode { Adjusted, Constant };

struct PowerPolicy {
    PowerMode mode = PowerMode::Adjusted;
    double rate_ul_req = 0.03; // R_U0, bits/s at 1 Hz
    double rate_dl_req = 0.06; // R_D0, bits/s at 1 Hz
    double epsilon = 0.1;      // cell-edge outage probability
};

struct TxPowers {
    double p_bs; // watts
    double p_ms; // watts
};

// Required received power sizing a cell-edge user for rate rate_req at
// outage epsilon under unit-mean Rayleigh fading:
//   P^req = -(2^rate_req - 1) sigma^2 / (ln(1 - epsilon) l(R))
inline double required_received_power(double rate_req, double epsilon,
                                      double sigma2_w, double cell_radius,
                                      double alpha) {
    if (epsilon <= 0.0 || epsilon >= 1.0)
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (rate_req <= 0.0)
        throw std::invalid_argument("required rate must be positive");
    return -(std::exp2(rate_req) - 1.0) * sigma2_w /
           (std::log(1.0 - epsilon) * pathloss(cell_radius, alpha));
}

// Minimal transmit power meeting the requirement at the far cell edge,
// P(rho) = P^req / l(R - rho); strictly decreasing in rho.
inline double adjusted_power(double p_req, double rho, double cell_radius,
                             double alpha) {
    return p_req / pathloss(cell_radius - rho, alpha);
}

// BS power is sized by the DL rate requirement, MS power by the UL one.
// Constant mode freezes both at their rho = 0 values.
inline TxPowers powers_for(const CellLayout& layout, const PowerPolicy& policy,
                           const PropagationParams& params) {
    const double sigma2 = noise_watts(params.noise_dbm);
    const double rho = policy.mode == PowerMode::Adjusted ? layout.rho : 0.0;
    const double req_bs = required_received_power(
        policy.rate_dl_req, policy.epsilon, sigma2, layout.radius, params.alpha);
    const double req_ms = required_received_power(
        policy.rate_ul_req, policy.epsilon, sigma2, layout.radius, params.alpha);
    return {adjusted_power(req_bs, rho, layout.radius, params.alpha),
            adjusted_power(req_ms, rho, layout.radius, params.alpha)};
}

} // namespace compflex
