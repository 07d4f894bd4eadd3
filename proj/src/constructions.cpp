#include "rightangle/constructions.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rightangle/error.hpp"

namespace rightangle {

namespace {

using DecimalPair = std::pair<std::string_view, std::string_view>;

constexpr std::array<DecimalPair, 10> kConfig10 = {{
    {"5.001213", "67.864232"},
    {"5.00126", "68.653515"},
    {"12.840744", "78.993522"},
    {"28.03804", "64.093769"},
    {"29.996837", "69.918767"},
    {"32.357229", "39.866702"},
    {"37.862434", "43.727817"},
    {"91.164903", "82.745474"},
    {"94.840088", "68.559448"},
    {"95.819369", "60.912308"},
}};

constexpr std::array<DecimalPair, 11> kConfig11 = {{
    {"15", "14"}, {"21", "10"}, {"31", "5"}, {"36", "79"}, {"36", "80"}, {"61", "78"},
    {"62", "73"}, {"74", "61"}, {"85", "90"}, {"89", "85"}, {"93", "72"},
}};

double parse_decimal(std::string_view text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorCode::ParseError, "bad embedded decimal '" + std::string(text) + "'");
    }
    return v;
}

template <std::size_t N>
Configuration from_decimals(const std::array<DecimalPair, N>& table) {
    std::vector<Point> pts;
    pts.reserve(N);
    for (const auto& [x, y] : table) pts.push_back({parse_decimal(x), parse_decimal(y)});
    return Configuration(std::move(pts));
}

}  // namespace

Configuration seven_point() {
    std::vector<Point> pts;
    for (int y = 0; y <= 2; ++y) {
        for (int x = 0; x <= 2; ++x) {
            if (y == 2 && x != 1) continue;
            pts.push_back({static_cast<double>(x), static_cast<double>(y)});
        }
    }
    return Configuration(std::move(pts));
}

Configuration cluster_grid(double scale) {
    if (!(scale > 2.0) || !std::isfinite(scale)) {
        throw Error(ErrorCode::InvalidScale, "cluster grid needs N > 2");
    }
    std::vector<Point> pts;
    for (int col = 0; col <= 2; ++col) {
        for (int row = 0; row <= 2; ++row) {
            pts.push_back({col * scale, static_cast<double>(row)});
        }
    }
    return Configuration(std::move(pts));
}

Configuration circle_points(std::size_t n) {
    if (n < 3) throw Error(ErrorCode::InvalidCount, "circle needs at least three points");
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        pts.push_back({std::cos(t), std::sin(t)});
    }
    return Configuration(std::move(pts));
}

Configuration szekeres_truncated(std::size_t n, double base, std::size_t max_depth) {
    if (n < 1) throw Error(ErrorCode::InvalidCount, "need at least one point");
    if (!(base > 1.0) || !std::isfinite(base)) {
        throw Error(ErrorCode::InvalidParams, "Szekeres base R must exceed 1");
    }
    std::size_t t = 1;
    while ((std::size_t{1} << t) < n) {
        if (++t > max_depth) break;
    }
    if (t > max_depth) {
        throw Error(ErrorCode::BudgetExceeded, "Szekeres depth t=" + std::to_string(t) +
                                                   " exceeds limit " + std::to_string(max_depth));
    }

    std::vector<Point> dirs(t);
    std::vector<double> scale(t);
    for (std::size_t j = 0; j < t; ++j) {
        const double phase = std::numbers::pi * static_cast<double>(j) / static_cast<double>(t);
        dirs[j] = {std::cos(phase), std::sin(phase)};
        scale[j] = std::pow(base, static_cast<double>(j));
    }
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Point p;
        for (std::size_t j = 0; j < t; ++j) {
            if ((i >> j) & 1U) {
                p.x += scale[j] * dirs[j].x;
                p.y += scale[j] * dirs[j].y;
            }
        }
        pts.push_back(p);
    }
    return Configuration(std::move(pts));
}

Configuration szekeres(const SzekeresParams& p, std::size_t max_depth) {
    if (p.t < 1) throw Error(ErrorCode::InvalidParams, "Szekeres depth t must be >= 1");
    if (p.t > max_depth) {
        throw Error(ErrorCode::BudgetExceeded, "Szekeres depth t=" + std::to_string(p.t) +
                                                   " exceeds limit " + std::to_string(max_depth));
    }
    return szekeres_truncated(std::size_t{1} << p.t, p.base, max_depth);
}

Configuration paper_config_10() { return from_decimals(kConfig10); }

Configuration paper_config_11() { return from_decimals(kConfig11); }

}  // namespace rightangle
