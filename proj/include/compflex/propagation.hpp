#pragma once

#include <cmath>
#include <vector>

#include "compflex/geometry.hpp"
#include "compflex/rng.hpp"

namespace compflex {

struct PropagationParams {
    double alpha = 4.0;       // pathloss exponent, > 1
    double noise_dbm = -174.0; // AWGN power at MS and BS
};

// l(d) = (1 + |d|)^-alpha. The +1 offset removes the singularity at d=0.
inline double pathloss(double d, double alpha) {
    return std::pow(1.0 + std::abs(d), -alpha);
}

inline double noise_watts(double noise_dbm) {
    return std::pow(10.0, (noise_dbm - 30.0) / 10.0);
}

// Rayleigh fading at the power-gain level: exponential with unit mean.
inline double draw_fading(SplitMix64& stream) {
    return -std::log1p(-stream.uniform01());
}

using TierGains = TierTable;

// Fading power gains for every signal and interference path of one trial.
struct LinkRealization {
    double g_mb = 1.0, g_bm = 1.0, g_mm = 1.0; // intra-cell links
    std::vector<TierGains> tiers;              // index n-1

    double gain(const LinkClass& link) const {
        if (link.tier == 0) {
            switch (link.kind) {
            case LinkKind::MB: return g_mb;
            case LinkKind::BM: return g_bm;
            case LinkKind::MM: return g_mm;
            default: throw std::invalid_argument("intra-cell BB link has no gain");
            }
        }
        const TierGains& t = tiers.at(static_cast<size_t>(link.tier) - 1);
        const bool left = link.side == Side::Left;
        switch (link.kind) {
        case LinkKind::MB: return left ? t.mb_l : t.mb_r;
        case LinkKind::BM: return left ? t.bm_l : t.bm_r;
        case LinkKind::BB: return left ? t.bb_l : t.bb_r;
        case LinkKind::MM: return left ? t.mm_l : t.mm_r;
        }
        throw std::invalid_argument("bad link kind");
    }

    static LinkRealization unit(int tiers) {
        LinkRealization r;
        r.tiers.assign(static_cast<size_t>(tiers),
                       TierGains{1, 1, 1, 1, 1, 1, 1, 1});
        return r;
    }
};

// Draw order is fixed; callers rely on it for reproducibility.
inline LinkRealization draw_link_realization(SplitMix64& stream, int tiers) {
    LinkRealization r;
    r.g_mb = draw_fading(stream);
    r.g_bm = draw_fading(stream);
    r.g_mm = draw_fading(stream);
    r.tiers.reserve(static_cast<size_t>(tiers));
    for (int n = 0; n < tiers; ++n) {
        TierGains t;
        t.mb_l = draw_fading(stream);
        t.mb_r = draw_fading(stream);
        t.bm_l = draw_fading(stream);
        t.bm_r = draw_fading(stream);
        t.bb_l = draw_fading(stream);
        t.bb_r = draw_fading(stream);
        t.mm_l = draw_fading(stream);
        t.mm_r = draw_fading(stream);
        r.tiers.push_back(t);
    }
    return r;
}

} // namespace compflex
