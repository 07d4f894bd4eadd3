#include "rightangle/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rightangle/error.hpp"

namespace rightangle {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;
constexpr double kRadPerDeg = std::numbers::pi / 180.0;

void require_distinct(const Point& p, const Point& vertex) {
    if (p == vertex) {
        throw Error(ErrorCode::CoincidentPoints, "ray endpoint coincides with vertex");
    }
}

}  // namespace

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidPoint: return "InvalidPoint";
        case ErrorCode::DuplicatePoint: return "DuplicatePoint";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::CoincidentPoints: return "CoincidentPoints";
        case ErrorCode::SubsetTooSmall: return "SubsetTooSmall";
        case ErrorCode::InvalidK: return "InvalidK";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::DuplicateXCoordinate: return "DuplicateXCoordinate";
        case ErrorCode::InvalidScale: return "InvalidScale";
        case ErrorCode::InvalidCount: return "InvalidCount";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Configuration::Configuration(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) {
        throw Error(ErrorCode::DegenerateInput, "configuration needs at least one point");
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
            throw Error(ErrorCode::InvalidPoint, "point " + std::to_string(i) + " is not finite");
        }
    }
    std::vector<std::size_t> order(points_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        const Point& a = points_[l];
        const Point& b = points_[r];
        return a.x < b.x || (a.x == b.x && (a.y < b.y || (a.y == b.y && l < r)));
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (points_[order[i - 1]] == points_[order[i]]) {
            throw Error(ErrorCode::DuplicatePoint, "points " + std::to_string(order[i - 1]) +
                                                       " and " + std::to_string(order[i]) +
                                                       " coincide");
        }
    }
}

double angle_at(const Point& a, const Point& b, const Point& c) {
    require_distinct(a, b);
    require_distinct(c, b);
    const double ux = a.x - b.x;
    const double uy = a.y - b.y;
    const double vx = c.x - b.x;
    const double vy = c.y - b.y;
    const double cross = ux * vy - uy * vx;
    const double dot = ux * vx + uy * vy;
    return std::atan2(std::abs(cross), dot) * kDegPerRad;
}

double deviation(const Point& a, const Point& b, const Point& c) {
    return std::abs(angle_at(a, b, c) - 90.0);
}

double wrap_half_turn(double deg) {
    double r = std::fmod(deg, 180.0);
    if (r < 0.0) r += 180.0;
    if (r >= 180.0) r -= 180.0;
    return r;
}

double segment_direction(const Point& a, const Point& b) {
    require_distinct(a, b);
    return wrap_half_turn(std::atan2(b.y - a.y, b.x - a.x) * kDegPerRad);
}

Point apply(const Transform& op, const Point& p) {
    switch (op.kind) {
        case Transform::Kind::rotate: {
            const double t = op.theta_deg * kRadPerDeg;
            const double c = std::cos(t);
            const double s = std::sin(t);
            return {c * p.x - s * p.y, s * p.x + c * p.y};
        }
        case Transform::Kind::reflect: {
            const double t = 2.0 * op.theta_deg * kRadPerDeg;
            const double c = std::cos(t);
            const double s = std::sin(t);
            return {c * p.x + s * p.y, s * p.x - c * p.y};
        }
        case Transform::Kind::translate:
            return {p.x + op.dx, p.y + op.dy};
        case Transform::Kind::scale:
            return {p.x * op.factor, p.y * op.factor};
    }
    return p;
}

Configuration transform(const Configuration& s, const Transform& op) {
    if (op.kind == Transform::Kind::scale && !(op.factor > 0.0)) {
        throw Error(ErrorCode::InvalidScale, "scale factor must be positive");
    }
    std::vector<Point> out;
    out.reserve(s.size());
    for (const Point& p : s) out.push_back(apply(op, p));
    return Configuration(std::move(out));
}

std::vector<double> segment_directions(const Configuration& s) {
    std::vector<double> dirs;
    dirs.reserve(s.size() * (s.size() - 1) / 2);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            dirs.push_back(segment_direction(s[i], s[j]));
        }
    }
    return dirs;
}

DirectionGap largest_direction_gap(const Configuration& s) {
    if (s.size() < 2) {
        throw Error(ErrorCode::DegenerateInput, "direction gap needs at least two points");
    }
    std::vector<double> dirs = segment_directions(s);
    std::sort(dirs.begin(), dirs.end());

    DirectionGap best{dirs.back(), dirs.front() + 180.0 - dirs.back()};
    auto consider = [&best](double start, double width) {
        if (width > best.width_deg || (width == best.width_deg && start < best.start_deg)) {
            best = {start, width};
        }
    };
    for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
        consider(dirs[i], dirs[i + 1] - dirs[i]);
    }
    return best;
}

}  // namespace rightangle
