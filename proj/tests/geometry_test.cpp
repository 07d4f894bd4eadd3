#include "rightangle/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rightangle/constructions.hpp"
#include "rightangle/error.hpp"
#include "rightangle/scorer.hpp"
#include "support.hpp"

namespace ra = rightangle;
using ra::Point;

namespace {

ra::ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ra::Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected rightangle::Error";
    return ra::ErrorCode::IoError;
}

}  // namespace

TEST(Configuration, RejectsDuplicatesAndNonFinite) {
    EXPECT_EQ(code_of([] { ra::Configuration({{0, 0}, {1, 1}, {0, 0}}); }),
              ra::ErrorCode::DuplicatePoint);
    EXPECT_EQ(code_of([] { ra::Configuration({{0, NAN}}); }), ra::ErrorCode::InvalidPoint);
    EXPECT_EQ(code_of([] { ra::Configuration({{INFINITY, 0}}); }), ra::ErrorCode::InvalidPoint);
    EXPECT_EQ(code_of([] { ra::Configuration(std::vector<Point>{}); }), ra::ErrorCode::DegenerateInput);
}

TEST(Configuration, AcceptsNearDuplicates) {
    const ra::Configuration s = ra::paper_config_10();
    EXPECT_LT(std::abs(s[0].x - s[1].x), 1e-4);
    EXPECT_NE(s[0].x, s[1].x);
    EXPECT_EQ(s.size(), 10u);
}

TEST(AngleAt, Examples) {
    EXPECT_DOUBLE_EQ(ra::angle_at({0, 0}, {1, 0}, {1, 1}), 90.0);
    EXPECT_DOUBLE_EQ(ra::angle_at({0, 0}, {1, 0}, {2, 0}), 180.0);
    EXPECT_DOUBLE_EQ(ra::angle_at({2, 0}, {0, 0}, {1, 0}), 0.0);

    const ra::Configuration s = ra::paper_config_10();
    const double ang = ra::angle_at(s[2], s[1], s[6]);
    EXPECT_NEAR(std::abs(ang - 90.0), 0.0126, 0.0005);
    EXPECT_NEAR(ang, ra::testing::angle_acos(s[2], s[1], s[6]), 1e-9);
}

TEST(AngleAt, CoincidentPoints) {
    EXPECT_EQ(code_of([] { ra::angle_at({0, 0}, {0, 0}, {1, 1}); }), ra::ErrorCode::CoincidentPoints);
    EXPECT_EQ(code_of([] { ra::angle_at({0, 0}, {1, 1}, {1, 1}); }), ra::ErrorCode::CoincidentPoints);
    // a == c is a legal zero angle.
    EXPECT_DOUBLE_EQ(ra::angle_at({1, 1}, {0, 0}, {1, 1}), 0.0);
}

TEST(Deviation, Examples) {
    EXPECT_DOUBLE_EQ(ra::deviation({0, 0}, {1, 0}, {1, 1}), 0.0);
    EXPECT_NEAR(ra::deviation({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}), 30.0, 1e-12);
    const ra::Configuration s = ra::paper_config_10();
    EXPECT_NEAR(ra::deviation(s[0], s[1], s[8]), 0.0566, 0.0005);
}

TEST(SegmentDirection, Examples) {
    EXPECT_DOUBLE_EQ(ra::segment_direction({0, 0}, {1, 1}), 45.0);
    EXPECT_DOUBLE_EQ(ra::segment_direction({0, 0}, {0, 5}), 90.0);
    EXPECT_DOUBLE_EQ(ra::segment_direction({1, 2}, {0, 2}), 0.0);
    EXPECT_DOUBLE_EQ(ra::segment_direction({1, 1}, {0, 0}), 45.0);
    EXPECT_EQ(code_of([] { ra::segment_direction({3, 3}, {3, 3}); }), ra::ErrorCode::CoincidentPoints);
}

TEST(Transform, RotateFullTurnIsIdentity) {
    std::mt19937_64 rng(7);
    const ra::Configuration s = ra::testing::random_configuration(rng, 12);
    const ra::Configuration r = ra::transform(s, ra::Transform::rotation(360.0));
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_NEAR(r[i].x, s[i].x, 1e-9);
        EXPECT_NEAR(r[i].y, s[i].y, 1e-9);
    }
}

TEST(Transform, ScaleKeepsDeviations) {
    std::mt19937_64 rng(8);
    const ra::Configuration s = ra::testing::random_configuration(rng, 8);
    const ra::Configuration big = ra::transform(s, ra::Transform::scaling(7.0));
    ra::testing::subsets(8, 3, [&](const std::vector<std::size_t>& t) {
        EXPECT_NEAR(ra::deviation(s[t[0]], s[t[1]], s[t[2]]),
                    ra::deviation(big[t[0]], big[t[1]], big[t[2]]), 1e-9);
    });
    EXPECT_THROW(ra::transform(s, ra::Transform::scaling(0.0)), ra::Error);
    EXPECT_THROW(ra::transform(s, ra::Transform::scaling(-1.0)), ra::Error);
}

TEST(Transform, ReflectionPreservesTableDeviations) {
    const ra::Configuration s = ra::paper_config_10();
    const ra::Configuration m = ra::transform(s, ra::Transform::reflection(0.0));
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_EQ(m[i].x, s[i].x);
        EXPECT_EQ(m[i].y, -s[i].y);
    }
    for (std::size_t b = 0; b < 10; ++b)
        for (std::size_t a = 0; a < 10; ++a)
            for (std::size_t c = a + 1; c < 10; ++c) {
                if (a == b || c == b) continue;
                EXPECT_NEAR(ra::deviation(s[a], s[b], s[c]), ra::deviation(m[a], m[b], m[c]), 1e-9);
            }
}

TEST(Transform, ReflectionAboutTiltedLine) {
    // The line at 45 degrees swaps coordinates.
    const Point p = ra::apply(ra::Transform::reflection(45.0), {3.0, 1.0});
    EXPECT_NEAR(p.x, 1.0, 1e-12);
    EXPECT_NEAR(p.y, 3.0, 1e-12);
}

TEST(DirectionGap, Examples) {
    const ra::DirectionGap line = ra::largest_direction_gap(ra::Configuration({{0, 0}, {1, 0}, {3, 0}}));
    EXPECT_DOUBLE_EQ(line.width_deg, 180.0);
    EXPECT_DOUBLE_EQ(line.start_deg, 0.0);

    const ra::DirectionGap sq =
        ra::largest_direction_gap(ra::Configuration({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    EXPECT_DOUBLE_EQ(sq.width_deg, 45.0);
    EXPECT_DOUBLE_EQ(sq.start_deg, 0.0);  // four-way tie, smallest start wins

    EXPECT_GE(ra::largest_direction_gap(ra::paper_config_10()).width_deg, 4.0);
    EXPECT_THROW(ra::largest_direction_gap(ra::Configuration({{0, 0}})), ra::Error);
}

TEST(DirectionGap, GapIsEmptyAndAtLeastPigeonholeWidth) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> size(2, 14);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = size(rng);
        const ra::Configuration s = ra::testing::random_configuration(rng, n);
        const ra::DirectionGap gap = ra::largest_direction_gap(s);
        const double pairs = static_cast<double>(ra::binomial(n, 2));
        ASSERT_GE(gap.width_deg, 180.0 / pairs - 1e-12);
        ASSERT_GE(gap.start_deg, 0.0);
        ASSERT_LT(gap.start_deg, 180.0);
        for (double d : ra::segment_directions(s)) {
            const double offset = ra::wrap_half_turn(d - gap.start_deg);
            // open arc (start, start + width) contains no direction
            ASSERT_TRUE(offset == 0.0 || offset >= gap.width_deg - 1e-9) << "direction " << d;
        }
    }
}

TEST(GeometryProperties, SymmetryInvarianceAndAngleSum) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const ra::Transform motions[] = {ra::Transform::rotation(37.5), ra::Transform::reflection(-12.0),
                                     ra::Transform::translation(13.0, -4.5),
                                     ra::Transform::scaling(3.25)};
    for (int trial = 0; trial < 2000; ++trial) {
        const Point a{unit(rng), unit(rng)}, b{unit(rng), unit(rng)}, c{unit(rng), unit(rng)};
        const double abc = ra::angle_at(a, b, c);
        ASSERT_EQ(abc, ra::angle_at(c, b, a));
        const double dev = ra::deviation(a, b, c);
        ASSERT_GE(dev, 0.0);
        ASSERT_LE(dev, 90.0);
        ASSERT_NEAR(abc + ra::angle_at(b, c, a) + ra::angle_at(c, a, b), 180.0, 1e-9);
        for (const ra::Transform& t : motions) {
            ASSERT_NEAR(ra::angle_at(ra::apply(t, a), ra::apply(t, b), ra::apply(t, c)), abc, 1e-9);
        }
    }
}

TEST(GeometryProperties, DeviationIsNinetyExactlyWhenCollinear) {
    EXPECT_DOUBLE_EQ(ra::deviation({0, 0}, {1, 2}, {2, 4}), 90.0);
    EXPECT_DOUBLE_EQ(ra::deviation({0, 0}, {2, 4}, {1, 2}), 90.0);
    EXPECT_LT(ra::deviation({0, 0}, {1, 2}, {2, 4.001}), 90.0);
}
