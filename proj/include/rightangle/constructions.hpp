#pragma once

#include <cstddef>

#include "rightangle/geometry.hpp"

namespace rightangle {

/// {0,1,2}^2 without (0,2) and (2,2), row-major. Every 4-subset has a right angle.
Configuration seven_point();

/// {0, N, 2N} x {0, 1, 2}; requires N > 2.
Configuration cluster_grid(double scale);

/// n equally spaced points on the unit circle, the first at angle 0.
Configuration circle_points(std::size_t n);

struct SzekeresParams {
    std::size_t t = 1;
    double base = 10.0;  // R > 1
};

inline constexpr std::size_t kMaxSzekeresDepth = 20;

/// 2^t points P_v = sum_j v_j R^j (cos(pi j/t), sin(pi j/t)). Point i uses
/// v_j = bit j of i.
Configuration szekeres(const SzekeresParams& p, std::size_t max_depth = kMaxSzekeresDepth);

/// The first n points of szekeres(t, R) with t = ceil(log2 n).
Configuration szekeres_truncated(std::size_t n, double base,
                                 std::size_t max_depth = kMaxSzekeresDepth);

/// Record configurations, parsed from embedded decimal strings.
Configuration paper_config_10();
Configuration paper_config_11();

}  // namespace rightangle
