#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "rightangle/geometry.hpp"
#include "rightangle/scorer.hpp"

namespace rightangle::detail {

/// Cache of angle_at(a, b, c) for all index triples of a point set. Above
/// kMaxCachedPoints the angles are computed on demand.
class AngleTable {
public:
    static constexpr std::size_t kMaxCachedPoints = 160;

    explicit AngleTable(std::span<const Point> points)
        : points_(points.begin(), points.end()), n_(points.size()),
          cached_(n_ <= kMaxCachedPoints) {
        if (cached_) {
            angles_.assign(n_ * n_ * n_, 0.0);
            for (std::size_t b = 0; b < n_; ++b) fill_vertex(b);
        }
    }

    std::size_t size() const noexcept { return n_; }
    const Point& point(std::size_t i) const { return points_[i]; }
    std::span<const Point> points() const noexcept { return points_; }

    double angle(std::size_t a, std::size_t b, std::size_t c) const {
        if (cached_) return angles_[(b * n_ + a) * n_ + c];
        return angle_at(points_[a], points_[b], points_[c]);
    }

    DeviationReport report(std::size_t a, std::size_t b, std::size_t c) const {
        if (a > c) std::swap(a, c);
        const double ang = angle(a, b, c);
        return {a, b, c, ang, std::abs(ang - 90.0)};
    }

    /// Move point p and refresh every cached angle that involves it.
    void set_point(std::size_t p, const Point& q) {
        points_[p] = q;
        if (!cached_) return;
        fill_vertex(p);
        for (std::size_t b = 0; b < n_; ++b) {
            if (b == p) continue;
            for (std::size_t o = 0; o < n_; ++o) {
                if (o == b || o == p) continue;
                const double ang = angle_at(points_[p], points_[b], points_[o]);
                angles_[(b * n_ + p) * n_ + o] = ang;
                angles_[(b * n_ + o) * n_ + p] = ang;
            }
        }
    }

private:
    void fill_vertex(std::size_t b) {
        for (std::size_t a = 0; a < n_; ++a) {
            if (a == b) continue;
            for (std::size_t c = a + 1; c < n_; ++c) {
                if (c == b) continue;
                const double ang = angle_at(points_[a], points_[b], points_[c]);
                angles_[(b * n_ + a) * n_ + c] = ang;
                angles_[(b * n_ + c) * n_ + a] = ang;
            }
        }
    }

    std::vector<Point> points_;
    std::size_t n_;
    bool cached_;
    std::vector<double> angles_;
};

/// Min-deviation angle of a subset, honouring the (deviation, b, a, c) order.
inline DeviationReport subset_min(const AngleTable& table, std::span<const std::size_t> subset) {
    DeviationReport best{};
    bool have = false;
    for (std::size_t bi = 0; bi < subset.size(); ++bi) {
        for (std::size_t ai = 0; ai < subset.size(); ++ai) {
            if (ai == bi) continue;
            for (std::size_t ci = ai + 1; ci < subset.size(); ++ci) {
                if (ci == bi) continue;
                const DeviationReport r = table.report(subset[ai], subset[bi], subset[ci]);
                if (!have || precedes(r, best)) {
                    best = r;
                    have = true;
                }
            }
        }
    }
    return best;
}

}  // namespace rightangle::detail
