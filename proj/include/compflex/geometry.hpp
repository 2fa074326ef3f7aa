#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

// 1-D multi-cell layout. Coordinate convention (single source of truth):
// the center cell is centered at the origin, its DL half is the negative
// axis and its UL half the positive axis. The DL-BS sits at -rho, the
// UL-BS at +rho, the DL-MS at -v, the UL-MS at +u. The n-th interfering
// cell on each side is centered at -2nR (left) and +2nR (right).

namespace compflex {

struct CellLayout {
    double radius = 100.0; // cell radius R, meters
    double rho = 0.0;      // BS splitting distance from the cell center, meters
    int tiers = 10;        // interfering cells per side

    void validate() const {
        if (radius <= 0.0)
            throw std::invalid_argument("cell radius must be positive");
        if (rho < 0.0 || rho > radius / 2.0)
            throw std::invalid_argument("rho must lie in [0, R/2]");
        if (tiers < 0)
            throw std::invalid_argument("tier count must be nonnegative");
    }
};

struct Placement {
    double u = 0.0; // UL-MS offset from the cell center, in [0, R]
    double v = 0.0; // DL-MS offset from the cell center, in [0, R]
    std::vector<double> u_left;  // u_{n,L}, index n-1
    std::vector<double> u_right; // u_{n,R}, index n-1
};

enum class LinkKind { MB, BM, BB, MM };
enum class Side { Left, Right };

// tier == 0 denotes an intra-cell link (valid for MB, BM, MM only).
struct LinkClass {
    LinkKind kind;
    Side side;
    int tier;
};

struct IntraDistances {
    double d_mb; // UL-MS to UL-BS
    double d_bm; // DL-BS to DL-MS
    double d_mm; // UL-MS to DL-MS
};

// One value per (link kind, side) for a given tier. Also reused as the
// per-tier fading gain table, which has the same shape.
struct TierTable {
    double mb_l, mb_r;
    double bm_l, bm_r;
    double bb_l, bb_r;
    double mm_l, mm_r;
};

using TierDistances = TierTable;

struct BaselineCrossDistances {
    double ul_left;  // UL phase: UL-MS (+u) to the left BS (-rho)
    double ul_right; // UL phase: DL-MS (-v) to the right BS (+rho)
    double dl_left;  // DL phase: right BS (+rho) to the DL-MS (-v)
    double dl_right; // DL phase: left BS (-rho) to the UL-MS (+u)
};

inline IntraDistances intra_distances(const CellLayout& layout, const Placement& p) {
    return {std::abs(p.u - layout.rho), std::abs(p.v - layout.rho), p.u + p.v};
}

inline void check_tier(const CellLayout& layout, int n) {
    if (n < 1 || n > layout.tiers)
        throw std::invalid_argument("tier index out of range");
}

// Interfering cells follow the same deployment pattern as the center cell:
// DL-BS at center-rho, UL-MS at center+u_{n,side}.
inline TierDistances mirrored_tier_distances(const CellLayout& layout,
                                             const Placement& p, int n) {
    check_tier(layout, n);
    const double span = 2.0 * n * layout.radius;
    const double rho = layout.rho;
    const double ul = p.u_left.at(static_cast<size_t>(n) - 1);
    const double ur = p.u_right.at(static_cast<size_t>(n) - 1);
    return {
        span - ul + rho, span + ur - rho, // MB
        span + rho - p.v, span - rho + p.v, // BM
        span + 2.0 * rho, span - 2.0 * rho, // BB
        span - ul - p.v, span + ur + p.v,   // MM
    };
}

// Worst-case deployment: left cell BS at its center and MS at the near
// edge; right cell BS at rho=R/2 (left half) and MS at the cell center.
inline TierDistances worstcase_tier_distances(const CellLayout& layout,
                                              const Placement& p, int n) {
    check_tier(layout, n);
    const double span = 2.0 * n * layout.radius;
    const double R = layout.radius;
    const double rho = layout.rho;
    return {
        span - R + rho, span - rho,                 // MB
        span - p.v, span - R / 2.0 + p.v,           // BM
        span + rho, span - R / 2.0 - rho,           // BB
        span - R - p.v, span + p.v,                 // MM
    };
}

inline BaselineCrossDistances baseline_cross_distances(const CellLayout& layout,
                                                       const Placement& p) {
    const double rho = layout.rho;
    return {p.u + rho, p.v + rho, rho + p.v, rho + p.u};
}

} // namespace compflex
