#pragma once

// Test-only generators and independent oracles. Nothing here calls into the
// library's angle kernel or enumerators.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "rightangle/geometry.hpp"

namespace rightangle::testing {

inline constexpr double kPi = std::numbers::pi;

inline Configuration random_configuration(std::mt19937_64& rng, std::size_t n, double extent = 100.0) {
    std::uniform_real_distribution<double> coord(0.0, extent);
    std::vector<Point> pts;
    while (pts.size() < n) {
        const Point p{coord(rng), coord(rng)};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return Configuration(std::move(pts));
}

/// Angle via arccos of the normalised dot product (a different route from
/// the library's atan2 kernel).
inline double angle_acos(const Point& a, const Point& b, const Point& c) {
    const double ux = a.x - b.x, uy = a.y - b.y, vx = c.x - b.x, vy = c.y - b.y;
    const double cosv = (ux * vx + uy * vy) / (std::hypot(ux, uy) * std::hypot(vx, vy));
    return std::acos(std::clamp(cosv, -1.0, 1.0)) * 180.0 / kPi;
}

inline double deviation_acos(const Point& a, const Point& b, const Point& c) {
    return std::abs(angle_acos(a, b, c) - 90.0);
}

/// Recursive k-subset enumeration.
inline void subsets(std::size_t n, std::size_t k,
                    const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            fn(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

/// Min deviation over every ordered (a, b, c) of distinct subset members.
template <typename DevFn>
double brute_subset_min(const std::vector<std::size_t>& t, DevFn dev) {
    double best = 1e300;
    for (std::size_t a : t)
        for (std::size_t b : t)
            for (std::size_t c : t)
                if (a != b && b != c && a != c) best = std::min(best, dev(a, b, c));
    return best;
}

/// gamma(S,k) by direct enumeration with the arccos kernel.
inline double brute_gamma(const Configuration& s, std::size_t k) {
    double best = -1.0;
    subsets(s.size(), k, [&](const std::vector<std::size_t>& t) {
        best = std::max(best, brute_subset_min(t, [&](std::size_t a, std::size_t b, std::size_t c) {
                            return deviation_acos(s[a], s[b], s[c]);
                        }));
    });
    return best;
}

/// gamma for n equally spaced points on a circle, from inscribed angles only:
/// the angle at j between i and l is half the arc from i to l avoiding j,
/// i.e. (number of steps on that arc) * 180 / n.
inline double inscribed_circle_gamma(std::size_t n, std::size_t k) {
    auto angle = [n](std::size_t a, std::size_t b, std::size_t c) {
        // steps from a to c going the way that does not pass b
        const std::size_t fwd = (c + n - a) % n;           // a -> c counter-clockwise
        const std::size_t to_b = (b + n - a) % n;
        const std::size_t arc = to_b < fwd ? n - fwd : fwd;
        return static_cast<double>(arc) * 180.0 / static_cast<double>(n);
    };
    double best = -1.0;
    subsets(n, k, [&](const std::vector<std::size_t>& t) {
        best = std::max(best, brute_subset_min(t, [&](std::size_t a, std::size_t b, std::size_t c) {
                            return std::abs(angle(a, b, c) - 90.0);
                        }));
    });
    return best;
}

}  // namespace rightangle::testing
