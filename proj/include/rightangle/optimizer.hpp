#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rightangle/geometry.hpp"
#include "rightangle/scorer.hpp"

namespace rightangle {

struct AnnealParams {
    std::size_t n = 10;
    std::size_t k = 4;
    std::int64_t grid = 100;  // lattice {1..grid}^2
    std::uint64_t iterations = 200'000;
    double t_initial = 3.0;  // degrees
    double cooling = 0.99998;
    double relocate_prob = 0.2;
    std::int64_t local_radius = 3;
    std::uint64_t seed = 1;
    std::uint64_t trace_every = 1000;  // 0 records only the first and last iteration
    bool check_invariants = false;      // verify lattice/distinctness every iteration
    std::uint64_t budget = kDefaultBudget;
};

struct TraceRecord {
    std::uint64_t iter = 0;
    double temperature = 0.0;
    double gamma_current = 0.0;
    double gamma_best = 0.0;
};

struct AnnealResult {
    Configuration best;
    GammaResult result;
    std::vector<TraceRecord> trace;
    std::uint64_t accepted = 0;
    std::uint64_t skipped = 0;  // proposals dropped after exhausting re-draws
};

/// Metropolis chain over n distinct lattice points minimising gamma(S, k).
/// Deterministic for a given parameter set and seed.
AnnealResult anneal(const AnnealParams& p);

/// Independent chains for seeds p.seed, p.seed+1, ..., run on up to
/// `threads` worker threads. Results are ordered by seed.
std::vector<AnnealResult> anneal_seeds(const AnnealParams& p, std::size_t seeds,
                                       std::size_t threads = 0);

/// Log-sum-exp surrogate: soft-max over k-subsets of the soft-min of each
/// subset's angle deviations, both at inverse temperature beta (1/degree).
double smoothed_gamma(const Configuration& s, std::size_t k, double beta,
                      std::uint64_t budget = kDefaultBudget);

struct RefineParams {
    std::vector<double> beta_schedule{1e2, 1e3, 1e4};
    double fd_step = 1e-6;
    std::size_t max_iters = 200;  // gradient steps per beta
    double min_rel_improvement = 1e-6;
    double initial_step = 1e-2;  // first line-search step, relative to the bounding-box diagonal
    std::size_t max_halvings = 40;
    std::uint64_t budget = kDefaultBudget;
};

struct RefineResult {
    Configuration config;
    GammaResult result;
    std::size_t accepted_steps = 0;
    std::size_t gradient_evaluations = 0;
    std::vector<double> gamma_history;  // exact gamma: input, then after each accepted step
};

/// Finite-difference descent on smoothed_gamma; a step is taken only when the
/// exact gamma strictly decreases, so the returned gamma never exceeds the input's.
RefineResult refine(const Configuration& s, std::size_t k, const RefineParams& p = {});

}  // namespace rightangle
