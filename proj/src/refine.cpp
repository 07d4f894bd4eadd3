#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "angle_table.hpp"
#include "rightangle/error.hpp"
#include "rightangle/optimizer.hpp"

namespace rightangle {

namespace {

// Shifted log-sum-exp: returns log(sum exp(scale * (v - anchor))) / scale + anchor,
// where anchor is the extreme value in the direction of `scale`.
double soft_extreme(std::span<const double> values, double scale) {
    const double anchor = scale > 0 ? *std::max_element(values.begin(), values.end())
                                    : *std::min_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += std::exp(scale * (v - anchor));
    return anchor + std::log(sum) / scale;
}

double smoothed_from_table(const detail::AngleTable& table, std::size_t k, double beta) {
    std::vector<double> subset_values;
    std::vector<double> devs;
    for_each_subset(table.size(), k, [&](std::span<const std::size_t> subset) {
        devs.clear();
        for (std::size_t bi = 0; bi < k; ++bi) {
            for (std::size_t ai = 0; ai < k; ++ai) {
                for (std::size_t ci = ai + 1; ci < k; ++ci) {
                    if (ai == bi || ci == bi) continue;
                    devs.push_back(table.report(subset[ai], subset[bi], subset[ci]).deviation_deg);
                }
            }
        }
        subset_values.push_back(soft_extreme(devs, -beta));
    });
    return soft_extreme(subset_values, beta);
}

std::optional<double> try_smoothed(const std::vector<Point>& pts, std::size_t k, double beta) {
    try {
        const Configuration c(pts);
        return smoothed_from_table(detail::AngleTable(c.points()), k, beta);
    } catch (const Error&) {
        return std::nullopt;
    }
}

void validate(const Configuration& s, std::size_t k, const RefineParams& p) {
    auto fail = [](const char* what) { throw Error(ErrorCode::InvalidParams, what); };
    if (p.beta_schedule.empty()) fail("beta schedule is empty");
    for (std::size_t i = 0; i < p.beta_schedule.size(); ++i) {
        if (!(p.beta_schedule[i] > 0.0)) fail("beta values must be positive");
        if (i > 0 && !(p.beta_schedule[i] > p.beta_schedule[i - 1])) {
            fail("beta schedule must be strictly increasing");
        }
    }
    if (!(p.fd_step > 0.0)) fail("fd_step must be positive");
    if (!(p.initial_step > 0.0)) fail("initial_step must be positive");
    if (!(p.min_rel_improvement >= 0.0)) fail("min_rel_improvement must be non-negative");
    if (k < 3 || k > s.size()) throw Error(ErrorCode::InvalidK, "need 3 <= k <= n");
    if (binomial(s.size(), k) > p.budget) {
        throw Error(ErrorCode::BudgetExceeded, "C(n,k) exceeds the enumeration budget");
    }
}

double bounding_diagonal(const Configuration& s) {
    double lo_x = s[0].x, hi_x = s[0].x, lo_y = s[0].y, hi_y = s[0].y;
    for (const Point& p : s) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    const double d = std::hypot(hi_x - lo_x, hi_y - lo_y);
    return d > 0.0 ? d : 1.0;
}

}  // namespace

double smoothed_gamma(const Configuration& s, std::size_t k, double beta, std::uint64_t budget) {
    if (k < 3 || k > s.size()) throw Error(ErrorCode::InvalidK, "need 3 <= k <= n");
    if (!(beta > 0.0)) throw Error(ErrorCode::InvalidParams, "beta must be positive");
    if (binomial(s.size(), k) > budget) {
        throw Error(ErrorCode::BudgetExceeded, "C(n,k) exceeds the enumeration budget");
    }
    return smoothed_from_table(detail::AngleTable(s.points()), k, beta);
}

RefineResult refine(const Configuration& s, std::size_t k, const RefineParams& p) {
    validate(s, k, p);
    const ScoreOptions score{ScoreMode::pruned, p.budget};
    const double diagonal = bounding_diagonal(s);

    std::vector<Point> current(s.begin(), s.end());
    double current_gamma = gamma(s, k, score).gamma_deg;
    RefineResult out{s, {}, 0, 0, {current_gamma}};

    std::vector<double> grad(2 * current.size());
    for (double beta : p.beta_schedule) {
        for (std::size_t iter = 0; iter < p.max_iters; ++iter) {
            // Central differences over all 2n coordinates.
            for (std::size_t i = 0; i < grad.size(); ++i) {
                std::vector<Point> probe = current;
                double& coord = (i % 2 == 0) ? probe[i / 2].x : probe[i / 2].y;
                const double base = coord;
                coord = base + p.fd_step;
                const auto up = try_smoothed(probe, k, beta);
                coord = base - p.fd_step;
                const auto down = try_smoothed(probe, k, beta);
                grad[i] = (up && down) ? (*up - *down) / (2.0 * p.fd_step) : 0.0;
            }
            ++out.gradient_evaluations;

            double scale = 0.0;
            for (double g : grad) scale = std::max(scale, std::abs(g));
            if (!(scale > 0.0) || !std::isfinite(scale)) break;

            // Backtracking along the normalised descent direction; a step is
            // kept only if the exact objective strictly drops.
            bool moved = false;
            double step = p.initial_step * diagonal;
            for (std::size_t h = 0; h <= p.max_halvings && !moved; ++h, step *= 0.5) {
                std::vector<Point> trial = current;
                for (std::size_t i = 0; i < trial.size(); ++i) {
                    trial[i].x -= step * grad[2 * i] / scale;
                    trial[i].y -= step * grad[2 * i + 1] / scale;
                }
                try {
                    const double trial_gamma = gamma(Configuration(trial), k, score).gamma_deg;
                    if (trial_gamma < current_gamma) {
                        const double rel = (current_gamma - trial_gamma) / current_gamma;
                        current = std::move(trial);
                        current_gamma = trial_gamma;
                        ++out.accepted_steps;
                        out.gamma_history.push_back(trial_gamma);
                        moved = true;
                        if (rel < p.min_rel_improvement) iter = p.max_iters;
                    }
                } catch (const Error&) {
                    // trial collapsed two points; keep halving
                }
            }
            if (!moved) break;
        }
    }

    out.config = Configuration(current);
    out.result = gamma(out.config, k, score);
    return out;
}

}  // namespace rightangle
