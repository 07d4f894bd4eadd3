#include "rightangle/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rightangle/error.hpp"

namespace rightangle {

namespace {

constexpr double kGapMarginDeg = 1e-6;

// (base)^exp + 1, saturating.
std::uint64_t pigeonhole_count(std::uint64_t base, std::uint64_t exp) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > kMax / base) return kMax;
        r *= base;
    }
    return r == kMax ? r : r + 1;
}

// Length of the longest strictly increasing run starting at each index.
std::vector<std::size_t> run_lengths_from(std::span<const double> values) {
    std::vector<std::size_t> length(values.size());
    std::vector<double> tails;
    for (std::size_t i = values.size(); i-- > 0;) {
        const double key = -values[i];
        const auto it = std::lower_bound(tails.begin(), tails.end(), key);
        length[i] = static_cast<std::size_t>(it - tails.begin()) + 1;
        if (it == tails.end()) {
            tails.push_back(key);
        } else {
            *it = key;
        }
    }
    return length;
}

}  // namespace

std::vector<std::size_t> longest_monotone_subsequence(std::span<const double> values,
                                                      Monotone direction) {
    if (values.empty()) return {};
    std::vector<double> keyed(values.begin(), values.end());
    if (direction == Monotone::decreasing) {
        for (double& v : keyed) v = -v;
    }
    const std::vector<std::size_t> length = run_lengths_from(keyed);
    std::size_t need = *std::max_element(length.begin(), length.end());

    std::vector<std::size_t> out;
    out.reserve(need);
    for (std::size_t i = 0; i < keyed.size() && need > 0; ++i) {
        if (length[i] == need && (out.empty() || keyed[i] > keyed[out.back()])) {
            out.push_back(i);
            --need;
        }
    }
    return out;
}

double gap_rotation(const Configuration& s, double target_deg) {
    return target_deg - largest_direction_gap(s).center_deg();
}

MonotoneWitness monotone_witness(const Configuration& s, std::size_t k) {
    if (k < 3) throw Error(ErrorCode::InvalidK, "monotone witness needs k >= 3");
    const std::uint64_t needed = pigeonhole_count(k - 1, 2);
    if (s.size() < needed) {
        throw Error(ErrorCode::TooFewPoints, "need at least " + std::to_string(needed) +
                                                 " points for k=" + std::to_string(k));
    }

    const DirectionGap gap = largest_direction_gap(s);

    // x-order (ties by y) of s rotated by `rotation`, and the rotated y values.
    std::vector<std::size_t> order(s.size());
    std::vector<double> ys(s.size());
    auto sort_rotated = [&](double rotation) {
        const Configuration rotated = transform(s, Transform::rotation(rotation));
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
            const Point& a = rotated[l];
            const Point& b = rotated[r];
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
        for (std::size_t i = 0; i < order.size(); ++i) ys[i] = rotated[order[i]].y;
    };

    // An increasing run only sees directions in [0, 90], so parking the gap at
    // [0, w] leaves them a window of 90 - w; a decreasing run wants the gap at
    // [180 - w, 180]. Centring the gap on 0 serves both, but only to w/2.
    // The gap ends are themselves segment directions; the small margin tips
    // the boundary segment into the opposite class so rounding can't put two
    // equal-height points into a strict run.
    const double margin = std::min(kGapMarginDeg, gap.width_deg / 4);
    MonotoneWitness w;
    std::vector<std::size_t> run;
    auto attempt = [&](double rotation, Monotone direction, double guarantee) {
        sort_rotated(rotation);
        run = longest_monotone_subsequence(ys, direction);
        if (run.size() < k) return false;
        w.rotation_deg = rotation;
        w.direction = direction;
        w.guaranteed_deviation_deg = guarantee;
        return true;
    };
    const bool found =
        attempt(-gap.start_deg - margin, Monotone::increasing, gap.width_deg - margin) ||
        attempt(180.0 + margin - gap.start_deg - gap.width_deg, Monotone::decreasing,
                gap.width_deg - margin) ||
        attempt(-gap.center_deg(), Monotone::increasing, gap.width_deg / 2) ||
        attempt(-gap.center_deg(), Monotone::decreasing, gap.width_deg / 2);
    if (!found) {
        // Unreachable with n >= (k-1)^2+1 distinct y values.
        throw std::logic_error("no monotone run of length k found");
    }
    for (std::size_t i = 0; i < k; ++i) w.subset.push_back(order[run[i]]);
    std::sort(w.subset.begin(), w.subset.end());
    w.measured_deviation_deg = subset_min_deviation(s, w.subset).deviation_deg;
    return w;
}

std::size_t direction_bin(const Point& left, const Point& right, std::size_t m) {
    const double theta = std::atan2(right.y - left.y, right.x - left.x) * (180.0 / std::numbers::pi);
    const double width = 180.0 / static_cast<double>(m);
    const double slot = std::floor((theta + 90.0) / width);
    if (slot <= 0.0) return 0;
    return std::min(static_cast<std::size_t>(slot), m - 1);
}

BinChainWitness bin_chain_witness(const Configuration& s, std::size_t k, std::size_t m) {
    if (k < 3) throw Error(ErrorCode::InvalidK, "bin-chain witness needs k >= 3");
    if (m < 1) throw Error(ErrorCode::InvalidParams, "bin count must be positive");
    const std::uint64_t needed = pigeonhole_count(k - 1, m);
    if (s.size() < needed) {
        throw Error(ErrorCode::TooFewPoints, "need at least " + std::to_string(needed) +
                                                 " points for k=" + std::to_string(k) +
                                                 ", m=" + std::to_string(m));
    }

    std::vector<std::size_t> order(s.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t l, std::size_t r) { return s[l].x < s[r].x; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (s[order[i - 1]].x == s[order[i]].x) {
            throw Error(ErrorCode::DuplicateXCoordinate,
                        "points " + std::to_string(order[i - 1]) + " and " +
                            std::to_string(order[i]) + " share an x coordinate");
        }
    }

    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    const std::size_t n = order.size();
    // label[j * m + b]: longest chain ending at the j-th point (x-order) whose
    // consecutive segments all lie in bin b.
    std::vector<std::size_t> label(n * m, 1);
    std::vector<std::size_t> back(n * m, kNone);

    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const std::size_t b = direction_bin(s[order[i]], s[order[j]], m);
            if (label[i * m + b] + 1 > label[j * m + b]) {
                label[j * m + b] = label[i * m + b] + 1;
                back[j * m + b] = i;
            }
        }
        for (std::size_t b = 0; b < m; ++b) {
            if (label[j * m + b] < k) continue;
            BinChainWitness w;
            w.bin = b;
            w.bin_count = m;
            std::size_t cur = j;
            for (std::size_t step = 0; step < k; ++step) {
                w.chain.push_back(order[cur]);
                cur = back[cur * m + b];
            }
            std::reverse(w.chain.begin(), w.chain.end());
            w.subset = w.chain;
            std::sort(w.subset.begin(), w.subset.end());
            return w;
        }
    }
    throw std::logic_error("label scan finished without a chain of length k");
}

}  // namespace rightangle
