#include "rightangle/optimizer.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rightangle/constructions.hpp"
#include "rightangle/error.hpp"
#include "support.hpp"

namespace ra = rightangle;
namespace rt = rightangle::testing;

namespace {

ra::AnnealParams quick(std::size_t n, std::size_t k, std::int64_t grid, std::uint64_t iters,
                       std::uint64_t seed) {
    ra::AnnealParams p;
    p.n = n;
    p.k = k;
    p.grid = grid;
    p.iterations = iters;
    p.seed = seed;
    p.trace_every = 100;
    return p;
}

}  // namespace

TEST(Anneal, FourPointsFindRightAngle) {
    ra::AnnealParams p = quick(4, 4, 50, 10'000, 3);
    const ra::AnnealResult r = ra::anneal(p);
    EXPECT_LE(r.result.gamma_deg, 0.5);
    ASSERT_EQ(r.best.size(), 4u);
}

TEST(Anneal, ReproducibleBitForBit) {
    const ra::AnnealParams p = quick(8, 4, 40, 3'000, 77);
    const ra::AnnealResult a = ra::anneal(p);
    const ra::AnnealResult b = ra::anneal(p);
    EXPECT_EQ(a.best, b.best);
    EXPECT_EQ(a.result.gamma_deg, b.result.gamma_deg);
    EXPECT_EQ(a.accepted, b.accepted);
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        EXPECT_EQ(a.trace[i].gamma_current, b.trace[i].gamma_current);
    }
    const ra::AnnealResult c = ra::anneal(quick(8, 4, 40, 3'000, 78));
    EXPECT_FALSE(c.best == a.best);
}

TEST(Anneal, TraceAndLatticeInvariants) {
    ra::AnnealParams p = quick(9, 4, 30, 5'000, 5);
    p.check_invariants = true;
    const ra::AnnealResult r = ra::anneal(p);
    ASSERT_GE(r.trace.size(), 2u);
    EXPECT_EQ(r.trace.front().iter, 0u);
    EXPECT_EQ(r.trace.back().iter, p.iterations);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
        EXPECT_LE(r.trace[i].gamma_best, r.trace[i - 1].gamma_best);
        EXPECT_LT(r.trace[i].temperature, r.trace[i - 1].temperature);
        EXPECT_LE(r.trace[i].gamma_best, r.trace[i].gamma_current);
    }
    EXPECT_EQ(r.trace.back().gamma_best, r.result.gamma_deg);
    for (const ra::Point& q : r.best) {
        EXPECT_EQ(q.x, std::round(q.x));
        EXPECT_GE(q.x, 1.0);
        EXPECT_LE(q.x, 30.0);
        EXPECT_GE(q.y, 1.0);
        EXPECT_LE(q.y, 30.0);
    }
    EXPECT_NEAR(r.result.gamma_deg, rt::brute_gamma(r.best, 4), 1e-8);
}

TEST(Anneal, InvalidParams) {
    auto code = [](const ra::AnnealParams& p) {
        try {
            ra::anneal(p);
        } catch (const ra::Error& e) {
            return e.code();
        }
        return ra::ErrorCode::IoError;
    };
    ra::AnnealParams p = quick(10, 4, 100, 10, 1);
    p.cooling = 1.0;
    EXPECT_EQ(code(p), ra::ErrorCode::InvalidParams);
    p = quick(10, 4, 3, 10, 1);
    EXPECT_EQ(code(p), ra::ErrorCode::InvalidParams);
    p = quick(10, 11, 100, 10, 1);
    EXPECT_EQ(code(p), ra::ErrorCode::InvalidParams);
    p = quick(10, 4, 100, 10, 1);
    p.t_initial = 0.0;
    EXPECT_EQ(code(p), ra::ErrorCode::InvalidParams);
    p = quick(10, 4, 100, 10, 1);
    p.relocate_prob = 1.5;
    EXPECT_EQ(code(p), ra::ErrorCode::InvalidParams);
}

TEST(Anneal, SeedsMatchSingleRuns) {
    const ra::AnnealParams p = quick(7, 4, 30, 1'500, 100);
    const auto many = ra::anneal_seeds(p, 4, 3);
    ASSERT_EQ(many.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        ra::AnnealParams single = p;
        single.seed = p.seed + i;
        const ra::AnnealResult r = ra::anneal(single);
        EXPECT_EQ(many[i].best, r.best);
        EXPECT_EQ(many[i].result.gamma_deg, r.result.gamma_deg);
    }
}

TEST(SmoothedGamma, LargeBetaApproachesExact) {
    const ra::Configuration s = ra::paper_config_10();
    const double exact = ra::gamma(s, 4).gamma_deg;
    EXPECT_NEAR(ra::smoothed_gamma(s, 4, 1e6), exact, 1e-3);
    EXPECT_NEAR(exact, 9.2919, 0.0005);
}

TEST(SmoothedGamma, SmallBetaBound) {
    const ra::Configuration s = ra::paper_config_10();
    const double exact = ra::gamma(s, 4).gamma_deg;
    const double soft = ra::smoothed_gamma(s, 4, 0.01);
    EXPECT_TRUE(std::isfinite(soft));
    EXPECT_LE(soft, exact + 90.0 / 0.01);
}

TEST(SmoothedGamma, SingleSubsetIsSoftMin) {
    const ra::Configuration s({{0, 0}, {3, 0}, {3.5, 2}, {0.2, 1.7}});
    const double beta = 0.8;
    double sum = 0.0;
    std::vector<double> devs;
    rt::subsets(4, 3, [&](const std::vector<std::size_t>& t) {
        // the three vertices of each triangle
        devs.push_back(rt::deviation_acos(s[t[1]], s[t[0]], s[t[2]]));
        devs.push_back(rt::deviation_acos(s[t[0]], s[t[1]], s[t[2]]));
        devs.push_back(rt::deviation_acos(s[t[0]], s[t[2]], s[t[1]]));
    });
    ASSERT_EQ(devs.size(), 12u);
    for (double d : devs) sum += std::exp(-beta * d);
    EXPECT_NEAR(ra::smoothed_gamma(s, 4, beta), -std::log(sum) / beta, 1e-9);
    EXPECT_NEAR(ra::smoothed_gamma(s, 4, 1e7), ra::gamma(s, 4).gamma_deg, 1e-5);
}

TEST(SmoothedGamma, ConvergenceBoundOnRandomSets) {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 5 + trial % 4;
        const std::size_t k = 3 + trial % 2;
        const ra::Configuration s = rt::random_configuration(rng, n);
        const double exact = ra::gamma(s, k).gamma_deg;
        const double angles = 3.0 * double(ra::binomial(k, 3));
        for (double beta : {1.0, 10.0, 1e3}) {
            const double bound = 90.0 * (std::log(double(ra::binomial(n, k))) + std::log(angles)) / beta;
            EXPECT_LE(std::abs(ra::smoothed_gamma(s, k, beta) - exact), bound);
        }
    }
}

TEST(SmoothedGamma, Errors) {
    const ra::Configuration s = ra::paper_config_10();
    EXPECT_THROW(ra::smoothed_gamma(s, 4, 0.0), ra::Error);
    EXPECT_THROW(ra::smoothed_gamma(s, 2, 1.0), ra::Error);
    try {
        ra::smoothed_gamma(s, 4, 1.0, 100);
        FAIL();
    } catch (const ra::Error& e) {
        EXPECT_EQ(e.code(), ra::ErrorCode::BudgetExceeded);
    }
}

TEST(Refine, PerturbedRecordNeverGetsWorse) {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> jitter(-0.5, 0.5);
    std::vector<ra::Point> pts;
    for (const ra::Point& p : ra::paper_config_10()) pts.push_back({p.x + jitter(rng), p.y + jitter(rng)});
    const ra::Configuration start(pts);
    const double before = ra::gamma(start, 4).gamma_deg;
    ra::RefineParams rp;
    rp.max_iters = 40;
    const ra::RefineResult r = ra::refine(start, 4, rp);
    EXPECT_LE(r.result.gamma_deg, before);
    ASSERT_EQ(r.gamma_history.size(), r.accepted_steps + 1);
    EXPECT_EQ(r.gamma_history.front(), before);
    for (std::size_t i = 1; i < r.gamma_history.size(); ++i) {
        EXPECT_LT(r.gamma_history[i], r.gamma_history[i - 1]);
    }
    EXPECT_EQ(r.gamma_history.back(), r.result.gamma_deg);
    EXPECT_NEAR(r.result.gamma_deg, rt::brute_gamma(r.config, 4), 1e-8);
}

TEST(Refine, ZeroIsUnimprovable) {
    const ra::Configuration sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const ra::RefineResult r = ra::refine(sq, 4);
    EXPECT_EQ(r.accepted_steps, 0u);
    EXPECT_EQ(r.config, sq);
    EXPECT_EQ(r.result.gamma_deg, 0.0);
}

TEST(Refine, ImprovesAnnealedLatticeConfiguration) {
    ra::AnnealParams p = quick(11, 4, 100, 20'000, 4);
    p.cooling = 0.9998;
    const ra::AnnealResult a = ra::anneal(p);
    ra::RefineParams rp;
    rp.max_iters = 30;
    const ra::RefineResult r = ra::refine(a.best, 4, rp);
    EXPECT_GT(r.accepted_steps, 0u);
    EXPECT_LT(r.result.gamma_deg, a.result.gamma_deg);
}

TEST(Refine, InvalidParams) {
    const ra::Configuration s = ra::paper_config_10();
    ra::RefineParams rp;
    rp.beta_schedule = {};
    EXPECT_THROW(ra::refine(s, 4, rp), ra::Error);
    rp.beta_schedule = {10.0, 5.0};
    EXPECT_THROW(ra::refine(s, 4, rp), ra::Error);
    rp = {};
    rp.fd_step = 0.0;
    EXPECT_THROW(ra::refine(s, 4, rp), ra::Error);
}
