#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rightangle {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Ordered planar point set. Points are finite and pairwise distinct under
/// exact coordinate comparison; near-duplicates are allowed.
class Configuration {
public:
    explicit Configuration(std::vector<Point> points);

    std::size_t size() const noexcept { return points_.size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Point> points() const noexcept { return points_; }

    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::vector<Point> points_;
};

/// Angle at vertex `b` between rays b->a and b->c, in degrees within [0, 180].
/// Uses atan2(|cross|, dot), which stays accurate near 0 and 180 degrees.
double angle_at(const Point& a, const Point& b, const Point& c);

/// |angle_at(a, b, c) - 90|, in [0, 90].
double deviation(const Point& a, const Point& b, const Point& c);

/// Direction of the undirected line through a and b, in [0, 180).
double segment_direction(const Point& a, const Point& b);

struct Transform {
    enum class Kind { rotate, reflect, translate, scale };

    Kind kind = Kind::rotate;
    double theta_deg = 0.0;  // rotate / reflect
    double dx = 0.0;         // translate
    double dy = 0.0;
    double factor = 1.0;     // scale, must be > 0

    static Transform rotation(double theta_deg) { return {Kind::rotate, theta_deg}; }
    // Reflection about the line through the origin at angle theta_deg.
    static Transform reflection(double theta_deg) { return {Kind::reflect, theta_deg}; }
    static Transform translation(double dx, double dy) { return {Kind::translate, 0.0, dx, dy}; }
    static Transform scaling(double s) { return {Kind::scale, 0.0, 0.0, 0.0, s}; }
};

Point apply(const Transform& op, const Point& p);
Configuration transform(const Configuration& s, const Transform& op);

struct DirectionGap {
    double start_deg = 0.0;  // in [0, 180)
    double width_deg = 0.0;  // in (0, 180]

    double center_deg() const noexcept { return start_deg + 0.5 * width_deg; }
};

/// Widest circular gap (mod 180) among all C(n,2) segment directions.
/// Ties go to the smallest start. Width is always >= 180 / C(n,2).
DirectionGap largest_direction_gap(const Configuration& s);

/// All C(n,2) segment directions in pair order (0,1), (0,2), ..., (n-2,n-1).
std::vector<double> segment_directions(const Configuration& s);

/// Reduce an angle in degrees to [0, 180).
double wrap_half_turn(double deg);

}  // namespace rightangle
